//
// Copyright 2026 The locaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Domain error kinds carried as absl::Status payloads. Each kind maps onto a
// canonical status code and can be recovered with ErrorKindOf().

#ifndef LOCAUDIT_CORE_ERRORS_H_
#define LOCAUDIT_CORE_ERRORS_H_

#include <optional>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"

namespace locaudit {

enum class ErrorKind {
  kDimensionMismatch,
  kRegionMassZero,
  kInsufficientData,
  kInsufficientCoverage,
  kOracleUnavailable,
  kParameterOutOfRange,
  kZeroMassRectangle,
  kInconsistentLabels,
  kOutsideLabelViolation,
  kZeroMassBall,
  kConfigInvalid,
  kRecordUnreadable,
  kConstructionRejected,
};

absl::string_view ErrorKindName(ErrorKind kind);

absl::Status MakeError(ErrorKind kind, absl::string_view message);

// Returns the kind attached by MakeError, if any.
std::optional<ErrorKind> ErrorKindOf(const absl::Status& status);

inline bool HasErrorKind(const absl::Status& status, ErrorKind kind) {
  return ErrorKindOf(status) == kind;
}

inline absl::Status DimensionMismatchError(absl::string_view message) {
  return MakeError(ErrorKind::kDimensionMismatch, message);
}
inline absl::Status ParameterOutOfRangeError(absl::string_view message) {
  return MakeError(ErrorKind::kParameterOutOfRange, message);
}

}  // namespace locaudit

#endif  // LOCAUDIT_CORE_ERRORS_H_

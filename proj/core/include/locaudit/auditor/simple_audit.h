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

#ifndef LOCAUDIT_AUDITOR_SIMPLE_AUDIT_H_
#define LOCAUDIT_AUDITOR_SIMPLE_AUDIT_H_

#include "absl/status/statusor.h"
#include "locaudit/auditor/audit_types.h"

namespace locaudit {

// The two-half estimator. The first m points are anchors; every anchor whose
// region holds at least k points of the remaining half is validated against
// those points and counted red when its empirical loss exceeds gamma
// (strictly), blue otherwise. Returns red / (red + blue).
//
// Errors: InsufficientData when |X| <= m, InsufficientCoverage when no
// anchor is validated.
absl::StatusOr<AuditReport> SimpleAudit(const AuditInput& input,
                                        const AuditorConfig& cfg);

// Same, with m and k given explicitly (used by tests and ablations).
absl::StatusOr<AuditReport> SimpleAuditWith(const AuditInput& input,
                                            double gamma, int64_t m,
                                            int64_t k);

}  // namespace locaudit

#endif  // LOCAUDIT_AUDITOR_SIMPLE_AUDIT_H_

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

#ifndef LOCAUDIT_AUDITOR_AUDIT_TYPES_H_
#define LOCAUDIT_AUDITOR_AUDIT_TYPES_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"
#include "locaudit/core/classifiers.h"

namespace locaudit {

// Tolerances (eps1, eps2, delta) and the local error threshold gamma.
struct AuditorConfig {
  double eps1 = 0.1;
  double eps2 = 0.1;
  double delta = 0.1;
  double gamma = 0.1;

  // All four in (0, 1) and gamma (1 + eps1) < 1.
  absl::Status Validate() const;
};

// What the auditor sees: X, f(X), and E(f, X).
struct AuditInput {
  std::vector<Point> points;
  std::vector<Label> labels;
  std::vector<LocalExplanation> explanations;

  absl::Status Validate() const;
  size_t size() const { return points.size(); }
};

enum class CountedAs { kRed, kBlue, kSkipped };

absl::string_view CountedAsName(CountedAs c);

struct AnchorRecord {
  int64_t anchor_index = 0;
  int64_t region_points = 0;
  int64_t disagreements = 0;
  // Only meaningful when counted_as != kSkipped.
  double empirical_loss = 0.0;
  CountedAs counted_as = CountedAs::kSkipped;
};

enum class Verdict { kPass, kFail, kUnknown };

absl::string_view VerdictName(Verdict v);

inline constexpr int kAuditReportVersion = 1;

struct AuditReport {
  double estimate = 0.0;
  int64_t m_used = 0;
  int64_t k_used = 0;
  int64_t n_validated = 0;  // r' + b'
  int64_t n_skipped = 0;
  int64_t red = 0;   // r'
  int64_t blue = 0;  // b'
  std::optional<std::pair<double, double>> target_interval;
  Verdict verdict = Verdict::kUnknown;
  std::vector<AnchorRecord> per_anchor;

  // Sets target_interval and the verdict (pass iff lo <= estimate <= hi).
  void Judge(std::pair<double, double> interval);

  nlohmann::json ToJson() const;
  static absl::StatusOr<AuditReport> FromJson(const nlohmann::json& j);
};

// Membership of `estimate` in the closed interval.
bool InInterval(double estimate, std::pair<double, double> interval);

}  // namespace locaudit

#endif  // LOCAUDIT_AUDITOR_AUDIT_TYPES_H_

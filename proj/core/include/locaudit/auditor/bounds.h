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

// Closed-form sample counts for the audit and the target accuracy interval.
// All logarithms are natural.

#ifndef LOCAUDIT_AUDITOR_BOUNDS_H_
#define LOCAUDIT_AUDITOR_BOUNDS_H_

#include <cstdint>
#include <functional>
#include <utility>

#include "absl/status/statusor.h"
#include "locaudit/auditor/audit_types.h"
#include "locaudit/core/loss_profile.h"

namespace locaudit {

// m = ceil(61 / eps2^2 * ln(12 / delta)): size of the anchor half X_1.
int64_t SimpleAuditM(const AuditorConfig& cfg);

// k = ceil(ln(176 / (eps2 delta)) / (2 gamma^2 eps1^2)): points of X_2 a
// region must hold before its anchor is validated.
int64_t SimpleAuditK(const AuditorConfig& cfg);

// Real-valued sample bound for simple_audit:
//   61/eps2^2 ln(12/delta)
//   + ln(176/(eps2 delta)) / (2 lambda gamma^2 eps1^2)
//     * ln(44 ln(176/(eps2 delta)) / (eps2 delta gamma^2 eps1^2)).
absl::StatusOr<double> UpperBoundSamplesReal(const AuditorConfig& cfg,
                                             double lambda);
// Ceiling of the above.
absl::StatusOr<int64_t> UpperBoundSamples(const AuditorConfig& cfg,
                                          double lambda);

// Gates for the hard-instance construction; the error names the first
// violated constraint ("eps1 < 1/48", "eps2 < 1/48", "gamma < 1/3",
// "lambda < eps2^2").
absl::Status CheckLowerBoundGates(const AuditorConfig& cfg, double lambda);

// floor(1 / (2592 max(eps1, eps2) lambda^(1 - 8 max(eps1, eps2)))).
absl::StatusOr<int64_t> LowerBoundSamples(const AuditorConfig& cfg,
                                          double lambda);

// n' = k ln(8k / (delta eps)) / lambda with eps = eps2 / 7: enough X_2
// points that a region of mass >= lambda holds k of them with probability
// at least 1 - delta eps / 8.
double CoverageSamples(int64_t k, const AuditorConfig& cfg, double lambda);
double CoverageTarget(const AuditorConfig& cfg);

// Exact L_alpha(E, f) as a function of alpha.
using ExactLossOracle = std::function<double(double alpha)>;

// [L_{gamma(1+eps1)} - eps2, L_{gamma(1-eps1)} + eps2] clamped to [0, 1].
std::pair<double, double> AccuracyInterval(const LossProfile& profile,
                                           const AuditorConfig& cfg);
absl::StatusOr<std::pair<double, double>> AccuracyInterval(
    const ExactLossOracle* oracle, const AuditorConfig& cfg);

}  // namespace locaudit

#endif  // LOCAUDIT_AUDITOR_BOUNDS_H_

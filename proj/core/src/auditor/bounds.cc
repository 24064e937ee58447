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

#include "locaudit/auditor/bounds.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

// Counts above this are not representable as sample sizes.
constexpr double kMaxCount = 4.0e18;

absl::StatusOr<int64_t> ToCount(double v, const char* what) {
  if (!(v >= 0.0) || v > kMaxCount) {
    return ParameterOutOfRangeError(
        absl::StrFormat("%s = %g is not a representable sample count", what,
                        v));
  }
  return static_cast<int64_t>(v);
}

}  // namespace

int64_t SimpleAuditM(const AuditorConfig& cfg) {
  return static_cast<int64_t>(
      std::ceil(61.0 / (cfg.eps2 * cfg.eps2) * std::log(12.0 / cfg.delta)));
}

int64_t SimpleAuditK(const AuditorConfig& cfg) {
  const double ge = cfg.gamma * cfg.eps1;
  return static_cast<int64_t>(std::ceil(
      std::log(176.0 / (cfg.eps2 * cfg.delta)) / (2.0 * ge * ge)));
}

absl::StatusOr<double> UpperBoundSamplesReal(const AuditorConfig& cfg,
                                             double lambda) {
  if (absl::Status s = cfg.Validate(); !s.ok()) return s;
  if (!(lambda > 0.0 && lambda <= 1.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("lambda must lie in (0, 1], got %g", lambda));
  }
  const double g2e2 = cfg.gamma * cfg.gamma * cfg.eps1 * cfg.eps1;
  const double log176 = std::log(176.0 / (cfg.eps2 * cfg.delta));
  const double first =
      61.0 / (cfg.eps2 * cfg.eps2) * std::log(12.0 / cfg.delta);
  const double second = log176 / (2.0 * lambda * g2e2) *
                        std::log(44.0 * log176 / (cfg.eps2 * cfg.delta * g2e2));
  return first + second;
}

absl::StatusOr<int64_t> UpperBoundSamples(const AuditorConfig& cfg,
                                          double lambda) {
  absl::StatusOr<double> v = UpperBoundSamplesReal(cfg, lambda);
  if (!v.ok()) return v.status();
  return ToCount(std::ceil(*v), "upper bound");
}

absl::Status CheckLowerBoundGates(const AuditorConfig& cfg, double lambda) {
  if (absl::Status s = cfg.Validate(); !s.ok()) return s;
  if (!(cfg.eps1 < 1.0 / 48.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("ε₁ < 1/48 violated (eps1 = %g)", cfg.eps1));
  }
  if (!(cfg.eps2 < 1.0 / 48.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("ε₂ < 1/48 violated (eps2 = %g)", cfg.eps2));
  }
  if (!(cfg.gamma < 1.0 / 3.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("γ < 1/3 violated (gamma = %g)", cfg.gamma));
  }
  if (!(lambda > 0.0 && lambda < cfg.eps2 * cfg.eps2)) {
    return ParameterOutOfRangeError(absl::StrFormat(
        "λ < ε₂² violated (lambda = %g, eps2^2 = %g)", lambda,
        cfg.eps2 * cfg.eps2));
  }
  return absl::OkStatus();
}

absl::StatusOr<int64_t> LowerBoundSamples(const AuditorConfig& cfg,
                                          double lambda) {
  if (absl::Status s = CheckLowerBoundGates(cfg, lambda); !s.ok()) return s;
  const double e = std::max(cfg.eps1, cfg.eps2);
  const double v = 1.0 / (2592.0 * e * std::pow(lambda, 1.0 - 8.0 * e));
  return ToCount(std::floor(v), "lower bound");
}

double CoverageSamples(int64_t k, const AuditorConfig& cfg, double lambda) {
  const double eps = cfg.eps2 / 7.0;
  const double kk = static_cast<double>(k);
  return kk * std::log(8.0 * kk / (cfg.delta * eps)) / lambda;
}

double CoverageTarget(const AuditorConfig& cfg) {
  return 1.0 - cfg.delta * (cfg.eps2 / 7.0) / 8.0;
}

std::pair<double, double> AccuracyInterval(const LossProfile& profile,
                                           const AuditorConfig& cfg) {
  const ExactLossOracle oracle = [&profile](double alpha) {
    return profile.LossAtLeast(alpha);
  };
  return *AccuracyInterval(&oracle, cfg);
}

absl::StatusOr<std::pair<double, double>> AccuracyInterval(
    const ExactLossOracle* oracle, const AuditorConfig& cfg) {
  if (oracle == nullptr || !*oracle) {
    return MakeError(ErrorKind::kOracleUnavailable,
                     "no exact explainability-loss oracle for this instance");
  }
  const double lo = (*oracle)(cfg.gamma * (1.0 + cfg.eps1)) - cfg.eps2;
  const double hi = (*oracle)(cfg.gamma * (1.0 - cfg.eps1)) + cfg.eps2;
  return std::make_pair(std::clamp(lo, 0.0, 1.0), std::clamp(hi, 0.0, 1.0));
}

}  // namespace locaudit

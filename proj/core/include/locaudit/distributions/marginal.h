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

#ifndef LOCAUDIT_DISTRIBUTIONS_MARGINAL_H_
#define LOCAUDIT_DISTRIBUTIONS_MARGINAL_H_

#include <string>

#include "absl/status/statusor.h"
#include "locaudit/core/random.h"

namespace locaudit {

// A continuous, strictly increasing one-dimensional law. Half-open interval
// masses use whichever of CDF / survival keeps precision in the tails.
class Marginal {
 public:
  enum class Kind { kUniform, kGaussian };

  // Uniform on [a, b], a < b.
  static absl::StatusOr<Marginal> Uniform(double a, double b);
  // Normal(mean, sd^2), sd > 0.
  static absl::StatusOr<Marginal> Gaussian(double mean, double sd);

  Kind kind() const { return kind_; }
  // (a, b) for uniform, (mean, sd) for Gaussian.
  double param0() const { return p0_; }
  double param1() const { return p1_; }

  double Cdf(double x) const;
  double Survival(double x) const;
  // mu((a, b]); zero when b <= a.
  double IntervalMass(double a, double b) const;

  // Smallest support bounds; infinite for the Gaussian.
  double support_lo() const;
  double support_hi() const;
  // Finite interval leaving `tail` mass on each side (exact support if the
  // support is already bounded).
  std::pair<double, double> ClippedSupport(double tail) const;

  // x in [a, b] with mu((a, x]) = frac * mu((a, b]); frac in [0, 1]. Infinite
  // ends are replaced by the clipped support first.
  double IntervalQuantile(double a, double b, double frac) const;
  double Quantile(double u) const;

  double Sample(Rng& rng) const;
  // Draw conditioned on (a, b]; requires mu((a, b]) > 0.
  double TruncatedSample(double a, double b, Rng& rng) const;

  std::string DebugString() const;

 private:
  Marginal(Kind kind, double p0, double p1) : kind_(kind), p0_(p0), p1_(p1) {}

  Kind kind_;
  double p0_;
  double p1_;
};

}  // namespace locaudit

#endif  // LOCAUDIT_DISTRIBUTIONS_MARGINAL_H_

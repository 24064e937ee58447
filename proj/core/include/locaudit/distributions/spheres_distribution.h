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

#ifndef LOCAUDIT_DISTRIBUTIONS_SPHERES_DISTRIBUTION_H_
#define LOCAUDIT_DISTRIBUTIONS_SPHERES_DISTRIBUTION_H_

#include <array>

#include "absl/status/statusor.h"
#include "locaudit/distributions/oracle.h"

namespace locaudit {

// Equal mixture of the uniform laws on three concentric spheres with radii
// 1 - alpha, 1, 1 + beta, where alpha = 1/(3670016 d^4), beta = 1/(3584 d^2).
class SpheresDistribution final : public DistributionOracle {
 public:
  static absl::StatusOr<SpheresDistribution> Create(int d);

  static double AlphaFor(int d);
  static double BetaFor(int d);

  int dim() const override { return d_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::array<double, 3>& radii() const { return radii_; }

  Point Sample(Rng& rng) const override;
  // Also reports which sphere (0, 1, 2) the point came from.
  Point SampleWithIndex(Rng& rng, int* sphere) const;

  // Exact, via spherical-cap decomposition.
  std::optional<double> BallMass(const Ball& b) const override;
  absl::StatusOr<Point> BallConditionalSample(const Ball& b,
                                              Rng& rng) const override;

 private:
  explicit SpheresDistribution(int d);

  int d_;
  double alpha_;
  double beta_;
  std::array<double, 3> radii_;
};

}  // namespace locaudit

#endif  // LOCAUDIT_DISTRIBUTIONS_SPHERES_DISTRIBUTION_H_

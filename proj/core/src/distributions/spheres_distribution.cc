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

#include "locaudit/distributions/spheres_distribution.h"

#include "absl/strings/str_cat.h"
#include "locaudit/core/errors.h"
#include "locaudit/distributions/sphere_sampling.h"
#include "locaudit/spheres/caps.h"

namespace locaudit {

double SpheresDistribution::AlphaFor(int d) {
  const double dd = d;
  return 1.0 / (3670016.0 * dd * dd * dd * dd);
}

double SpheresDistribution::BetaFor(int d) {
  const double dd = d;
  return 1.0 / (3584.0 * dd * dd);
}

SpheresDistribution::SpheresDistribution(int d)
    : d_(d),
      alpha_(AlphaFor(d)),
      beta_(BetaFor(d)),
      radii_{1.0 - alpha_, 1.0, 1.0 + beta_} {}

absl::StatusOr<SpheresDistribution> SpheresDistribution::Create(int d) {
  if (d < 5) {
    return ParameterOutOfRangeError(
        absl::StrCat("spheres distribution needs d >= 5, got ", d));
  }
  return SpheresDistribution(d);
}

Point SpheresDistribution::SampleWithIndex(Rng& rng, int* sphere) const {
  const int i = static_cast<int>(UniformIndex(rng, 3));
  if (sphere != nullptr) *sphere = i;
  return *SampleUniformSphere(d_, radii_[i], rng);
}

Point SpheresDistribution::Sample(Rng& rng) const {
  return SampleWithIndex(rng, nullptr);
}

std::optional<double> SpheresDistribution::BallMass(const Ball& b) const {
  if (b.dim() != d_) return std::nullopt;
  return DecomposeBall(radii_, b).mass;
}

absl::StatusOr<Point> SpheresDistribution::BallConditionalSample(
    const Ball& b, Rng& rng) const {
  if (b.dim() != d_) {
    return DimensionMismatchError("ball dimension vs spheres dimension");
  }
  return SampleInBall(radii_, DecomposeBall(radii_, b), rng);
}

}  // namespace locaudit

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

#include "locaudit/spheres/instance.h"

#include <cmath>

namespace locaudit {

Label SpheresClassifier::Classify(const Point& x) const {
  const double n2 = x.SquaredNorm();
  if (n2 <= 1.0 - 0.5 * alpha_) return Label::kPositive;
  if (n2 <= 1.0 + 0.5 * beta_) return Label::kNegative;
  return Label::kPositive;
}

absl::StatusOr<SpheresInstance> SpheresInstance::Create(int d) {
  absl::StatusOr<SpheresDistribution> dist = SpheresDistribution::Create(d);
  if (!dist.ok()) return dist.status();
  std::vector<double> x(d, 0.0);
  x[0] = 1.0 + dist->beta();
  SpheresClassifier f(dist->alpha(), dist->beta());
  return SpheresInstance{*std::move(dist), f, Point(std::move(x))};
}

double SpheresInstance::MassThreshold() const {
  return std::pow(3.0, 1.0 - d());
}

Label FSpheres(const SpheresInstance& instance, const Point& x) {
  return instance.f.Classify(x);
}

}  // namespace locaudit

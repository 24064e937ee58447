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

#ifndef LOCAUDIT_DISTRIBUTIONS_PRODUCT_DISTRIBUTION_H_
#define LOCAUDIT_DISTRIBUTIONS_PRODUCT_DISTRIBUTION_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/distributions/marginal.h"
#include "locaudit/distributions/oracle.h"

namespace locaudit {

// Independent coordinates. Rectangle masses and conditional samples are
// exact products of marginal quantities.
class ProductDistribution final : public DistributionOracle {
 public:
  static absl::StatusOr<ProductDistribution> Create(
      std::vector<Marginal> marginals);
  static ProductDistribution UniformCube(int dim);  // Uniform on [0, 1]^dim.

  int dim() const override { return static_cast<int>(marginals_.size()); }
  const Marginal& marginal(int i) const { return marginals_[i]; }
  const std::vector<Marginal>& marginals() const { return marginals_; }

  Point Sample(Rng& rng) const override;

  std::optional<double> RectMass(const HyperRectangle& r) const override;
  absl::StatusOr<Point> RectConditionalSample(const HyperRectangle& r,
                                              Rng& rng) const override;

  // Exact mass with a dimension check; never nullopt.
  absl::StatusOr<double> Mass(const HyperRectangle& r) const;

  // Bounded rectangle holding all but at most `outside_mass` of mu. Each of
  // the 2d tails receives outside_mass / (2d). Bounded marginals keep their
  // exact support.
  HyperRectangle SupportBox(double outside_mass = 1e-9) const;

  // Coordinate c on `axis` with mu((lo, c] slice of r) = frac * mu(r).
  double SplitPoint(const HyperRectangle& r, int axis, double frac) const;

  std::string DebugString() const;

 private:
  explicit ProductDistribution(std::vector<Marginal> marginals)
      : marginals_(std::move(marginals)) {}

  std::vector<Marginal> marginals_;
};

}  // namespace locaudit

#endif  // LOCAUDIT_DISTRIBUTIONS_PRODUCT_DISTRIBUTION_H_

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

#include "locaudit/distributions/product_distribution.h"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "locaudit/core/errors.h"

namespace locaudit {

absl::StatusOr<ProductDistribution> ProductDistribution::Create(
    std::vector<Marginal> marginals) {
  if (marginals.empty()) {
    return absl::InvalidArgumentError("product distribution needs dim >= 1");
  }
  return ProductDistribution(std::move(marginals));
}

ProductDistribution ProductDistribution::UniformCube(int dim) {
  std::vector<Marginal> m;
  m.reserve(dim);
  for (int i = 0; i < dim; ++i) m.push_back(*Marginal::Uniform(0.0, 1.0));
  return ProductDistribution(std::move(m));
}

Point ProductDistribution::Sample(Rng& rng) const {
  std::vector<double> x(marginals_.size());
  for (size_t i = 0; i < x.size(); ++i) x[i] = marginals_[i].Sample(rng);
  return Point(std::move(x));
}

absl::StatusOr<double> ProductDistribution::Mass(
    const HyperRectangle& r) const {
  if (r.dim() != dim()) {
    return DimensionMismatchError(
        absl::StrCat("rectangle dim ", r.dim(), " vs distribution dim ",
                     dim()));
  }
  double mass = 1.0;
  for (int i = 0; i < dim(); ++i) {
    mass *= marginals_[i].IntervalMass(r.lo(i), r.hi(i));
  }
  return mass;
}

std::optional<double> ProductDistribution::RectMass(
    const HyperRectangle& r) const {
  absl::StatusOr<double> mass = Mass(r);
  if (!mass.ok()) return std::nullopt;
  return *mass;
}

absl::StatusOr<Point> ProductDistribution::RectConditionalSample(
    const HyperRectangle& r, Rng& rng) const {
  absl::StatusOr<double> mass = Mass(r);
  if (!mass.ok()) return mass.status();
  if (!(*mass > 0.0)) {
    return MakeError(ErrorKind::kRegionMassZero,
                     "conditional sample from a zero-mass rectangle");
  }
  std::vector<double> x(marginals_.size());
  for (int i = 0; i < dim(); ++i) {
    x[i] = marginals_[i].TruncatedSample(r.lo(i), r.hi(i), rng);
  }
  return Point(std::move(x));
}

HyperRectangle ProductDistribution::SupportBox(double outside_mass) const {
  const double tail = outside_mass / (2.0 * dim());
  std::vector<double> lo(dim()), hi(dim());
  for (int i = 0; i < dim(); ++i) {
    std::tie(lo[i], hi[i]) = marginals_[i].ClippedSupport(tail);
  }
  return *HyperRectangle::Create(std::move(lo), std::move(hi));
}

double ProductDistribution::SplitPoint(const HyperRectangle& r, int axis,
                                       double frac) const {
  return marginals_[axis].IntervalQuantile(r.lo(axis), r.hi(axis), frac);
}

std::string ProductDistribution::DebugString() const {
  return absl::StrCat(
      "Product(",
      absl::StrJoin(marginals_, ", ",
                    [](std::string* out, const Marginal& m) {
                      out->append(m.DebugString());
                    }),
      ")");
}

}  // namespace locaudit

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

#include "locaudit/core/geometry.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "locaudit/core/errors.h"

namespace locaudit {

absl::StatusOr<Point> Point::Create(std::vector<double> coords) {
  if (coords.empty()) {
    return absl::InvalidArgumentError("Point must have positive dimension");
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("Point coordinate ", i, " is not finite"));
    }
  }
  return Point(std::move(coords));
}

double Point::SquaredNorm() const { return Dot(coords_, coords_); }

double Point::Norm() const { return std::sqrt(SquaredNorm()); }

double Dot(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double Distance(const Point& a, const Point& b) {
  double sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double diff = a[i] - b[i];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

absl::StatusOr<HyperRectangle> HyperRectangle::Create(std::vector<double> lo,
                                                      std::vector<double> hi) {
  if (lo.empty() || lo.size() != hi.size()) {
    return DimensionMismatchError(absl::StrCat(
        "rectangle bounds have dims ", lo.size(), " and ", hi.size()));
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (std::isnan(lo[i]) || std::isnan(hi[i]) || !(lo[i] < hi[i])) {
      return absl::InvalidArgumentError(absl::StrCat(
          "empty interval on axis ", i, ": (", lo[i], ", ", hi[i], "]"));
    }
  }
  return HyperRectangle(std::move(lo), std::move(hi));
}

HyperRectangle HyperRectangle::UnitCube(int dim) {
  return HyperRectangle(std::vector<double>(dim, 0.0),
                        std::vector<double>(dim, 1.0));
}

HyperRectangle HyperRectangle::Everything(int dim) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  return HyperRectangle(std::vector<double>(dim, -kInf),
                        std::vector<double>(dim, kInf));
}

bool HyperRectangle::Contains(const Point& x) const {
  if (x.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i) {
    if (!(lo_[i] < x[i] && x[i] <= hi_[i])) return false;
  }
  return true;
}

absl::StatusOr<std::pair<HyperRectangle, HyperRectangle>>
HyperRectangle::Split(int axis, double cut) const {
  if (axis < 0 || axis >= dim()) {
    return absl::InvalidArgumentError(absl::StrCat("bad split axis ", axis));
  }
  if (!(lo_[axis] < cut && cut < hi_[axis])) {
    return absl::InvalidArgumentError(
        absl::StrCat("cut ", cut, " outside (", lo_[axis], ", ", hi_[axis],
                     ") on axis ", axis));
  }
  HyperRectangle left = *this;
  HyperRectangle right = *this;
  left.hi_[axis] = cut;
  right.lo_[axis] = cut;
  return std::make_pair(std::move(left), std::move(right));
}

absl::StatusOr<Ball> Ball::Create(Point center, double radius) {
  if (center.dim() == 0) {
    return absl::InvalidArgumentError("ball center has no coordinates");
  }
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    return absl::InvalidArgumentError(
        absl::StrCat("ball radius must be finite and >= 0, got ", radius));
  }
  return Ball(std::move(center), radius);
}

bool Ball::Contains(const Point& x) const {
  if (x.dim() != dim()) return false;
  return Distance(x, center_) <= radius_;
}

bool Contains(const Region& region, const Point& x) {
  return std::visit([&](const auto& r) { return r.Contains(x); }, region);
}

int Dim(const Region& region) {
  return std::visit([](const auto& r) { return r.dim(); }, region);
}

}  // namespace locaudit

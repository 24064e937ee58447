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

#ifndef LOCAUDIT_CORE_GEOMETRY_H_
#define LOCAUDIT_CORE_GEOMETRY_H_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"

namespace locaudit {

// A point in R^d. Coordinates are always finite.
class Point {
 public:
  Point() = default;
  // Callers guarantee finiteness; use Create() for untrusted input.
  explicit Point(std::vector<double> coords) : coords_(std::move(coords)) {}

  static absl::StatusOr<Point> Create(std::vector<double> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  const std::vector<double>& vec() const { return coords_; }

  double Norm() const;
  double SquaredNorm() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

double Dot(std::span<const double> a, std::span<const double> b);
double Distance(const Point& a, const Point& b);

// Half-open product of intervals (lo_1, hi_1] x ... x (lo_d, hi_d].
// Bounds may be infinite; lo_i < hi_i always holds.
class HyperRectangle {
 public:
  static absl::StatusOr<HyperRectangle> Create(std::vector<double> lo,
                                               std::vector<double> hi);
  // Unit cube (0,1]^d.
  static HyperRectangle UnitCube(int dim);
  // (-inf, +inf]^d.
  static HyperRectangle Everything(int dim);

  int dim() const { return static_cast<int>(lo_.size()); }
  double lo(int i) const { return lo_[i]; }
  double hi(int i) const { return hi_[i]; }
  const std::vector<double>& lo() const { return lo_; }
  const std::vector<double>& hi() const { return hi_; }

  bool Contains(const Point& x) const;

  // Splits along `axis` at `cut` into (lo, cut] and (cut, hi]. Requires
  // lo(axis) < cut < hi(axis).
  absl::StatusOr<std::pair<HyperRectangle, HyperRectangle>> Split(
      int axis, double cut) const;

  friend bool operator==(const HyperRectangle&,
                         const HyperRectangle&) = default;

 private:
  HyperRectangle(std::vector<double> lo, std::vector<double> hi)
      : lo_(std::move(lo)), hi_(std::move(hi)) {}

  std::vector<double> lo_;
  std::vector<double> hi_;
};

// Closed L2 ball.
class Ball {
 public:
  static absl::StatusOr<Ball> Create(Point center, double radius);

  int dim() const { return center_.dim(); }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  bool Contains(const Point& x) const;

  friend bool operator==(const Ball&, const Ball&) = default;

 private:
  Ball(Point center, double radius)
      : center_(std::move(center)), radius_(radius) {}

  Point center_;
  double radius_ = 0.0;
};

using Region = std::variant<HyperRectangle, Ball>;

bool Contains(const Region& region, const Point& x);
int Dim(const Region& region);

}  // namespace locaudit

#endif  // LOCAUDIT_CORE_GEOMETRY_H_

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

#include "locaudit/adversary/partition.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

// 2^22 cells; deeper trees would not fit in memory.
constexpr int kMaxDepth = 22;

absl::Status ZeroMassRectangle(const HyperRectangle& r) {
  return MakeError(ErrorKind::kZeroMassRectangle,
                   absl::StrFormat("cannot split a zero-mass rectangle "
                                   "(dim %d)",
                                   r.dim()));
}

}  // namespace

absl::StatusOr<std::pair<HyperRectangle, HyperRectangle>> SplitRectangle(
    const ProductDistribution& dist, const HyperRectangle& r, int axis) {
  if (r.dim() != dist.dim()) {
    return DimensionMismatchError("rectangle vs distribution dimension");
  }
  if (axis < 0 || axis >= r.dim()) {
    return ParameterOutOfRangeError("split axis out of range");
  }
  absl::StatusOr<double> mass = dist.Mass(r);
  if (!mass.ok()) return mass.status();
  if (!(*mass > 0.0)) return ZeroMassRectangle(r);
  // Unbounded sides are clipped to the support box before searching.
  HyperRectangle box = r;
  if (!std::isfinite(r.lo(axis)) || !std::isfinite(r.hi(axis))) {
    const HyperRectangle support = dist.SupportBox(kSupportOutsideMass);
    std::vector<double> lo = r.lo(), hi = r.hi();
    lo[axis] = std::max(lo[axis], support.lo(axis));
    hi[axis] = std::min(hi[axis], support.hi(axis));
    absl::StatusOr<HyperRectangle> clipped = HyperRectangle::Create(lo, hi);
    if (!clipped.ok()) return ZeroMassRectangle(r);
    box = *clipped;
  }
  const double cut = dist.SplitPoint(box, axis, 0.5);
  auto children = r.Split(axis, cut);
  if (!children.ok()) return ZeroMassRectangle(r);
  return children;
}

absl::StatusOr<PartitionSpec> PartitionSpec::Build(
    const ProductDistribution& dist, double alpha, int64_t K) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("alpha must lie in (0, 1), got %g", alpha));
  }
  if (K < 1) return ParameterOutOfRangeError("K must be >= 1");
  const HyperRectangle support = dist.SupportBox(kSupportOutsideMass);
  std::vector<HyperRectangle> level = {support};
  std::vector<double> splits = {0.0};
  double cell_mass = *dist.Mass(support);
  int depth = 0;
  while (cell_mass > 4.0 * alpha) {
    if (depth >= kMaxDepth) {
      return ParameterOutOfRangeError("alpha too small: partition too deep");
    }
    const int axis = depth % dist.dim();
    std::vector<HyperRectangle> next;
    next.reserve(2 * level.size());
    double next_max = 0.0;
    for (const HyperRectangle& r : level) {
      auto children = SplitRectangle(dist, r, axis);
      if (!children.ok()) return children.status();
      splits.push_back(children->first.hi(axis));
      next_max = std::max({next_max, *dist.Mass(children->first),
                           *dist.Mass(children->second)});
      next.push_back(std::move(children->first));
      next.push_back(std::move(children->second));
    }
    level = std::move(next);
    cell_mass = next_max;
    ++depth;
  }
  return FromParts(dist, support, depth, std::move(splits), alpha, K);
}

absl::StatusOr<PartitionSpec> PartitionSpec::FromParts(
    const ProductDistribution& dist, HyperRectangle support, int depth,
    std::vector<double> splits, double alpha, int64_t K) {
  if (support.dim() != dist.dim()) {
    return DimensionMismatchError("support box vs distribution dimension");
  }
  if (depth < 0 || depth > kMaxDepth ||
      splits.size() != (size_t{1} << depth)) {
    return absl::InvalidArgumentError("split table does not match depth");
  }
  if (K < 1) return ParameterOutOfRangeError("K must be >= 1");
  PartitionSpec p(dist, std::move(support));
  p.support_mass_ = *dist.Mass(p.support_);
  p.alpha_ = alpha;
  p.depth_ = depth;
  p.K_ = K;
  p.splits_ = std::move(splits);
  // Expand the heap into explicit leaf rectangles.
  std::vector<HyperRectangle> level = {p.support_};
  for (int t = 0; t < depth; ++t) {
    const int axis = t % dist.dim();
    std::vector<HyperRectangle> next;
    next.reserve(2 * level.size());
    for (size_t i = 0; i < level.size(); ++i) {
      const size_t h = (size_t{1} << t) + i;
      auto children = level[i].Split(axis, p.splits_[h]);
      if (!children.ok()) {
        return MakeError(ErrorKind::kZeroMassRectangle,
                         "stored split lies outside its cell");
      }
      next.push_back(std::move(children->first));
      next.push_back(std::move(children->second));
    }
    level = std::move(next);
  }
  p.cells_ = std::move(level);
  p.masses_.reserve(p.cells_.size());
  for (const HyperRectangle& c : p.cells_) {
    p.masses_.push_back(*dist.Mass(c));
  }
  return p;
}

PartitionSpec PartitionSpec::WithK(int64_t K) const {
  PartitionSpec p = *this;
  p.K_ = std::max<int64_t>(K, 1);
  return p;
}

int64_t PartitionSpec::Locate(const Point& x) const {
  if (!support_.Contains(x)) return -1;
  size_t h = 1;
  for (int t = 0; t < depth_; ++t) {
    const int axis = t % dim();
    h = 2 * h + (x[axis] <= splits_[h] ? 0 : 1);
  }
  return static_cast<int64_t>(h - (size_t{1} << depth_));
}

int64_t PartitionSpec::LocateSub(int64_t cell, const Point& x) const {
  std::vector<double> lo = cells_[cell].lo(), hi = cells_[cell].hi();
  const int d = dim();
  const std::vector<Marginal>& marginals = dist_.marginals();
  int64_t count = K_;
  int64_t offset = 0;
  int axis = depth_ % d;
  while (count > 1) {
    const int64_t left = count / 2;
    const double frac = static_cast<double>(left) / static_cast<double>(count);
    const double cut =
        marginals[axis].IntervalQuantile(lo[axis], hi[axis], frac);
    if (x[axis] <= cut) {
      hi[axis] = cut;
      count = left;
    } else {
      lo[axis] = cut;
      offset += left;
      count -= left;
    }
    if (++axis == d) axis = 0;
  }
  return offset;
}

std::pair<int64_t, int64_t> PartitionSpec::LocateBoth(const Point& x) const {
  const int64_t cell = Locate(x);
  if (cell < 0) return {-1, -1};
  return {cell, LocateSub(cell, x)};
}

HyperRectangle PartitionSpec::SubCell(int64_t cell, int64_t j) const {
  std::vector<double> lo = cells_[cell].lo(), hi = cells_[cell].hi();
  int64_t count = K_;
  int64_t offset = 0;
  int t = depth_;
  while (count > 1) {
    const int axis = t % dim();
    const int64_t left = count / 2;
    const double frac = static_cast<double>(left) / static_cast<double>(count);
    const double cut = dist_.marginal(axis).IntervalQuantile(lo[axis],
                                                             hi[axis], frac);
    if (j < offset + left) {
      hi[axis] = cut;
      count = left;
    } else {
      lo[axis] = cut;
      offset += left;
      count -= left;
    }
    ++t;
  }
  // Degenerate (zero-width) sub-cells would violate the rectangle invariant;
  // they only arise if K exceeds the coordinate resolution.
  for (int i = 0; i < dim(); ++i) {
    if (!(lo[i] < hi[i])) hi[i] = std::nextafter(lo[i], hi[i] + 1.0);
  }
  return *HyperRectangle::Create(std::move(lo), std::move(hi));
}

absl::Status PartitionSpec::CheckInvariants(double tol) const {
  double total = 0.0;
  for (int64_t i = 0; i < cell_count(); ++i) {
    const double m = masses_[i];
    total += m;
    if (m < alpha_ * (1.0 - tol) || m > 4.0 * alpha_ * (1.0 + tol)) {
      return MakeError(ErrorKind::kConstructionRejected,
                       absl::StrFormat("cell %d mass %.17g outside "
                                       "[alpha, 4 alpha] = [%g, %g]",
                                       i, m, alpha_, 4.0 * alpha_));
    }
  }
  if (std::abs(total - support_mass_) > tol * std::max<double>(1.0, cell_count())) {
    return MakeError(ErrorKind::kConstructionRejected,
                     absl::StrFormat("cell masses sum to %.17g, support box "
                                     "holds %.17g",
                                     total, support_mass_));
  }
  if (1.0 - support_mass_ > kSupportOutsideMass * (1.0 + 1e-6)) {
    return MakeError(ErrorKind::kConstructionRejected,
                     "support box misses more than the allowed mass");
  }
  return absl::OkStatus();
}

}  // namespace locaudit

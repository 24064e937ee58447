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

// Mass-balanced rectangle partitions of a product distribution.
//
// Top level: the support box is halved at conditional mass medians, level
// by level (axis = depth mod d), until every cell has mass <= 4 alpha. All
// 2^D cells then carry equal mass in (2 alpha, 4 alpha].
//
// Second level: each cell R_i is cut into exactly K equal-mass sub-cells by
// a count-balanced quantile tree (a node holding c sub-cells sends
// floor(c/2) of them left). K is typically far too large to store, so
// sub-cells are addressed implicitly: LocateSub() descends the tree for one
// point and SubCell() rebuilds a single sub-rectangle on demand.

#ifndef LOCAUDIT_ADVERSARY_PARTITION_H_
#define LOCAUDIT_ADVERSARY_PARTITION_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/distributions/product_distribution.h"

namespace locaudit {

// Halves r at the conditional mass median along `axis`. Each child gets
// mu(r) / 2; the cell bounds only need mu(r) / 4.
absl::StatusOr<std::pair<HyperRectangle, HyperRectangle>> SplitRectangle(
    const ProductDistribution& dist, const HyperRectangle& r, int axis = 0);

inline constexpr double kSupportOutsideMass = 1e-9;

class PartitionSpec {
 public:
  // alpha in (0, 1), K >= 1. Unbounded marginals are clipped to a box that
  // leaves at most kSupportOutsideMass outside.
  static absl::StatusOr<PartitionSpec> Build(const ProductDistribution& dist,
                                             double alpha, int64_t K);

  // Rebuilds from stored split coordinates (replay).
  static absl::StatusOr<PartitionSpec> FromParts(
      const ProductDistribution& dist, HyperRectangle support, int depth,
      std::vector<double> splits, double alpha, int64_t K);

  // Same cells with a different sub-cell count.
  PartitionSpec WithK(int64_t K) const;

  const ProductDistribution& dist() const { return dist_; }
  const HyperRectangle& support() const { return support_; }
  double support_mass() const { return support_mass_; }
  double alpha() const { return alpha_; }
  int depth() const { return depth_; }
  int64_t K() const { return K_; }
  int dim() const { return dist_.dim(); }

  int64_t cell_count() const { return static_cast<int64_t>(cells_.size()); }
  const HyperRectangle& cell(int64_t i) const { return cells_[i]; }
  const std::vector<HyperRectangle>& cells() const { return cells_; }
  double mass(int64_t i) const { return masses_[i]; }
  const std::vector<double>& masses() const { return masses_; }
  // Heap-ordered split coordinates, index 1 .. 2^D - 1 (slot 0 unused).
  const std::vector<double>& splits() const { return splits_; }

  // Top-level cell holding x, or -1 outside the support box.
  int64_t Locate(const Point& x) const;

  // Sub-cell index in [0, K) of x inside cell i; x must lie in cell i.
  int64_t LocateSub(int64_t cell, const Point& x) const;

  // (cell, sub-cell) of x; cell = -1 outside the support box.
  std::pair<int64_t, int64_t> LocateBoth(const Point& x) const;

  HyperRectangle SubCell(int64_t cell, int64_t j) const;
  double SubMass(int64_t cell) const {
    return masses_[cell] / static_cast<double>(K_);
  }

  // Mass-balance invariants: every cell in [alpha, 4 alpha], cells tile the
  // support box (mass sum), sub-cell masses in [mu/(4K), mu/K].
  absl::Status CheckInvariants(double tol = 1e-12) const;

 private:
  PartitionSpec(ProductDistribution dist, HyperRectangle support)
      : dist_(std::move(dist)), support_(std::move(support)) {}

  ProductDistribution dist_;
  HyperRectangle support_;
  double support_mass_ = 1.0;
  double alpha_ = 0.0;
  int depth_ = 0;
  int64_t K_ = 1;
  std::vector<double> splits_;
  std::vector<HyperRectangle> cells_;
  std::vector<double> masses_;
};

}  // namespace locaudit

#endif  // LOCAUDIT_ADVERSARY_PARTITION_H_

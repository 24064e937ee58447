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

#include "locaudit/adversary/f_star.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"

namespace locaudit {

KeyedPermutation::KeyedPermutation(uint64_t n, uint64_t key)
    : n_(n), key_(Mix64(key)) {
  int bits = 2;
  while (bits < 64 && (uint64_t{1} << bits) < n) bits += 2;
  half_bits_ = bits / 2;
}

uint64_t KeyedPermutation::Round(uint64_t x) const {
  const uint64_t mask = (uint64_t{1} << half_bits_) - 1;
  uint64_t left = x >> half_bits_;
  uint64_t right = x & mask;
  for (uint64_t r = 0; r < 4; ++r) {
    const uint64_t f = Mix64(right ^ key_ ^ (r * 0x9e3779b97f4a7c15ULL)) & mask;
    const uint64_t next = left ^ f;
    left = right;
    right = next;
  }
  return (left << half_bits_) | right;
}

uint64_t KeyedPermutation::operator()(uint64_t x) const {
  if (n_ <= 1) return 0;
  uint64_t y = Round(x);
  while (y >= n_) y = Round(y);  // cycle walking
  return y;
}

absl::StatusOr<FStarInstance> FStarInstance::Create(
    std::shared_ptr<const PartitionSpec> partition,
    std::shared_ptr<const MomentMatchedProbs> probs, int world,
    std::vector<int> k_index, std::vector<int64_t> neg_count,
    std::vector<uint64_t> label_keys) {
  if (partition == nullptr || probs == nullptr) {
    return absl::InvalidArgumentError("partition and probs are required");
  }
  const size_t cells = static_cast<size_t>(partition->cell_count());
  if (k_index.size() != cells || neg_count.size() != cells ||
      label_keys.size() != cells) {
    return DimensionMismatchError("per-cell vectors must have one entry per cell");
  }
  if (world != 0 && world != 1) {
    return ParameterOutOfRangeError("world bit must be 0 or 1");
  }
  for (size_t i = 0; i < cells; ++i) {
    if (k_index[i] < 0 || k_index[i] >= 2 * probs->m) {
      return ParameterOutOfRangeError(
          absl::StrFormat("k_index[%d] = %d outside [0, 2m)", i, k_index[i]));
    }
    if (neg_count[i] < 0 || neg_count[i] > partition->K()) {
      return ParameterOutOfRangeError(
          absl::StrFormat("neg_count[%d] outside [0, K]", i));
    }
  }
  FStarInstance f;
  f.partition_ = std::move(partition);
  f.probs_ = std::move(probs);
  f.world_ = world;
  f.k_index_ = std::move(k_index);
  f.neg_count_ = std::move(neg_count);
  f.label_keys_ = std::move(label_keys);
  return f;
}

double FStarInstance::CellProbability(int64_t cell) const {
  const std::vector<double>& r = world_ == 1 ? probs_->p : probs_->q;
  return r[k_index_[cell]];
}

Label FStarInstance::SubLabel(int64_t cell, int64_t j) const {
  const KeyedPermutation perm(static_cast<uint64_t>(partition_->K()),
                              label_keys_[cell]);
  return perm(static_cast<uint64_t>(j)) <
                 static_cast<uint64_t>(neg_count_[cell])
             ? Label::kNegative
             : Label::kPositive;
}

Label FStarInstance::Evaluate(const Point& x) const {
  const auto [cell, sub] = partition_->LocateBoth(x);
  if (cell < 0) return Label::kPositive;
  return SubLabel(cell, sub);
}

double FStarInstance::CellLoss(int64_t cell) const {
  return static_cast<double>(neg_count_[cell]) /
         static_cast<double>(partition_->K());
}

std::vector<double> FStarInstance::CellLosses() const {
  std::vector<double> out(neg_count_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = CellLoss(i);
  return out;
}

LossProfile FStarInstance::ExactLossProfile() const {
  LossProfile profile;
  for (int64_t i = 0; i < partition_->cell_count(); ++i) {
    profile.Add(partition_->mass(i), CellLoss(i));
  }
  return profile;
}

double FStarInstance::ExactLossAtLeast(double alpha) const {
  double total = 0.0;
  for (int64_t i = 0; i < partition_->cell_count(); ++i) {
    if (CellLoss(i) >= alpha) total += partition_->mass(i);
  }
  return total;
}

FStarInstance SampleFStarInWorld(
    std::shared_ptr<const PartitionSpec> partition,
    std::shared_ptr<const MomentMatchedProbs> probs, int world, Rng& rng) {
  const int64_t cells = partition->cell_count();
  const int64_t K = partition->K();
  const std::vector<double>& r = world == 1 ? probs->p : probs->q;
  std::vector<int> k_index(cells);
  std::vector<int64_t> neg_count(cells);
  std::vector<uint64_t> keys(cells);
  for (int64_t i = 0; i < cells; ++i) {
    k_index[i] = static_cast<int>(UniformIndex(rng, r.size()));
    neg_count[i] = Binomial(rng, K, r[k_index[i]]);
    keys[i] = rng();
  }
  return *FStarInstance::Create(std::move(partition), std::move(probs), world,
                                std::move(k_index), std::move(neg_count),
                                std::move(keys));
}

FStarInstance SampleFStar(std::shared_ptr<const PartitionSpec> partition,
                          std::shared_ptr<const MomentMatchedProbs> probs,
                          Rng& rng) {
  const int world = Bernoulli(rng, 0.5) ? 1 : 0;
  return SampleFStarInWorld(std::move(partition), std::move(probs), world,
                            rng);
}

LocalExplanation HonestExplainer::Explain(const Classifier&,
                                          const Point& x) const {
  const int64_t cell = partition_->Locate(x);
  if (cell < 0) {
    return {x, HyperRectangle::Everything(x.dim()), ConstantClassifier{}};
  }
  return {x, partition_->cell(cell), ConstantClassifier{}};
}

double ChooseKReal(double gamma, double eps1, double eps2, double delta_c,
                   int64_t cell_count) {
  const double slack = 0.01 * gamma * std::min(eps1, eps2);
  return std::log(2.0 * static_cast<double>(cell_count) / delta_c) /
         (2.0 * slack * slack);
}

absl::StatusOr<int64_t> ChooseK(double gamma, double eps1, double eps2,
                                double delta_c, int64_t cell_count) {
  for (double v : {gamma, eps1, eps2, delta_c}) {
    if (!(v > 0.0 && v < 1.0)) {
      return ParameterOutOfRangeError(
          "gamma, eps1, eps2 and delta_c must lie in (0, 1)");
    }
  }
  if (cell_count < 1) return ParameterOutOfRangeError("cell_count must be >= 1");
  const double k = std::ceil(ChooseKReal(gamma, eps1, eps2, delta_c,
                                         cell_count));
  if (!(k <= 4.0e18)) return ParameterOutOfRangeError("K overflows int64");
  return static_cast<int64_t>(k);
}

}  // namespace locaudit

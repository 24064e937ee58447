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

// The randomized two-world classifier f* over a PartitionSpec.
//
// World P ~ Bernoulli(1/2) selects r = p (P = 1) or r = q (P = 0). Cell i
// draws k_i uniformly from {0, ..., 2m-1}, then each of its K sub-cells is
// labelled -1 independently with probability r[k_i].
//
// Storing K labels per cell is out of the question for K ~ 1e12, so the
// sampler draws the count N_i ~ Binomial(K, r[k_i]) and places the -1
// labels at the first N_i positions of a keyed pseudo-random permutation of
// the sub-cells. Conditional on N_i the -1 set is a uniform N_i-subset, so
// the joint law of the labels is the same as with independent coin flips.

#ifndef LOCAUDIT_ADVERSARY_F_STAR_H_
#define LOCAUDIT_ADVERSARY_F_STAR_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/adversary/partition.h"
#include "locaudit/core/classifiers.h"
#include "locaudit/core/loss_profile.h"
#include "locaudit/core/random.h"

namespace locaudit {

// Bijection on [0, n) keyed by `key`: a 4-round Feistel network on the
// smallest even-width power-of-two domain, with cycle walking.
class KeyedPermutation {
 public:
  KeyedPermutation(uint64_t n, uint64_t key);
  uint64_t operator()(uint64_t x) const;
  uint64_t size() const { return n_; }

 private:
  uint64_t Round(uint64_t x) const;
  uint64_t n_;
  uint64_t key_;
  int half_bits_;
};

class FStarInstance {
 public:
  // Explicit construction, mainly for tests and replay. k_index[i] in
  // [0, 2m), neg_count[i] in [0, K].
  static absl::StatusOr<FStarInstance> Create(
      std::shared_ptr<const PartitionSpec> partition,
      std::shared_ptr<const MomentMatchedProbs> probs, int world,
      std::vector<int> k_index, std::vector<int64_t> neg_count,
      std::vector<uint64_t> label_keys);

  const PartitionSpec& partition() const { return *partition_; }
  const MomentMatchedProbs& probs() const { return *probs_; }
  std::shared_ptr<const PartitionSpec> partition_ptr() const {
    return partition_;
  }
  std::shared_ptr<const MomentMatchedProbs> probs_ptr() const {
    return probs_;
  }
  int world() const { return world_; }
  const std::vector<int>& k_index() const { return k_index_; }
  const std::vector<int64_t>& neg_count() const { return neg_count_; }
  const std::vector<uint64_t>& label_keys() const { return label_keys_; }

  // r[k_i] for cell i, from the world's list.
  double CellProbability(int64_t cell) const;
  // Label of sub-cell j of cell i.
  Label SubLabel(int64_t cell, int64_t j) const;
  // +1 outside every cell, else the label of the sub-cell holding x.
  Label Evaluate(const Point& x) const;

  // Exact local loss of the honest explainer inside cell i: the -1 mass
  // fraction, N_i / K (all sub-cells of a cell carry equal mass).
  double CellLoss(int64_t cell) const;
  std::vector<double> CellLosses() const;
  // Atoms (mu(R_i), L_i). The region outside the support box (at most
  // kSupportOutsideMass) is left out.
  LossProfile ExactLossProfile() const;
  double ExactLossAtLeast(double alpha) const;

 private:
  FStarInstance() = default;
  std::shared_ptr<const PartitionSpec> partition_;
  std::shared_ptr<const MomentMatchedProbs> probs_;
  int world_ = 1;
  std::vector<int> k_index_;
  std::vector<int64_t> neg_count_;
  std::vector<uint64_t> label_keys_;
};

// Draws the world bit, then everything else.
FStarInstance SampleFStar(std::shared_ptr<const PartitionSpec> partition,
                          std::shared_ptr<const MomentMatchedProbs> probs,
                          Rng& rng);
// Same with the world fixed (1 -> p, 0 -> q).
FStarInstance SampleFStarInWorld(
    std::shared_ptr<const PartitionSpec> partition,
    std::shared_ptr<const MomentMatchedProbs> probs, int world, Rng& rng);

class FStarClassifier final : public Classifier {
 public:
  explicit FStarClassifier(const FStarInstance& f) : f_(f) {}
  Label Classify(const Point& x) const override { return f_.Evaluate(x); }

 private:
  const FStarInstance& f_;
};

// E(x) = (cell holding x, constant +1). Outside the support box the region
// is the whole space.
class HonestExplainer final : public Explainer {
 public:
  explicit HonestExplainer(std::shared_ptr<const PartitionSpec> partition)
      : partition_(std::move(partition)) {}
  LocalExplanation Explain(const Classifier& f, const Point& x) const override;
  ExplainerClass explainer_class() const override {
    return ExplainerClass::kRectConstant;
  }

 private:
  std::shared_ptr<const PartitionSpec> partition_;
};

// Smallest K such that, by a mass-weighted Hoeffding bound and a union
// bound over `cell_count` cells, every |L_i - r_i| <= 0.01 gamma
// min(eps1, eps2) with probability >= 1 - delta_c:
//   K = ceil(ln(2 cell_count / delta_c) / (2 (0.01 gamma min(eps1, eps2))^2)).
absl::StatusOr<int64_t> ChooseK(double gamma, double eps1, double eps2,
                                double delta_c, int64_t cell_count);
// Real-valued version, before the ceiling.
double ChooseKReal(double gamma, double eps1, double eps2, double delta_c,
                   int64_t cell_count);

}  // namespace locaudit

#endif  // LOCAUDIT_ADVERSARY_F_STAR_H_

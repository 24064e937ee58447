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

#include <cmath>
#include <memory>
#include <numbers>
#include <set>
#include <variant>

#include "gtest/gtest.h"
#include "locaudit/adversary/f_star.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/adversary/partition.h"
#include "locaudit/core/errors.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/product_distribution.h"

namespace locaudit {
namespace {

struct Fixture {
  std::shared_ptr<const PartitionSpec> partition;
  std::shared_ptr<const MomentMatchedProbs> probs;
};

Fixture Make(double alpha, int64_t K) {
  Fixture fx;
  fx.partition = std::make_shared<const PartitionSpec>(
      *PartitionSpec::Build(ProductDistribution::UniformCube(2), alpha, K));
  fx.probs = std::make_shared<const MomentMatchedProbs>(
      *BuildMomentMatchedProbs(0.02, 0.015, 1.0 / 64.0));
  return fx;
}

TEST(KeyedPermutationTest, IsBijection) {
  for (uint64_t n : {1u, 2u, 5u, 16u, 1000u, 4097u}) {
    for (uint64_t key : {0u, 7u, 123456789u}) {
      const KeyedPermutation perm(n, key);
      std::set<uint64_t> seen;
      for (uint64_t x = 0; x < n; ++x) {
        const uint64_t y = perm(x);
        ASSERT_LT(y, n);
        seen.insert(y);
      }
      EXPECT_EQ(seen.size(), n) << n << " " << key;
    }
  }
}

TEST(KeyedPermutationTest, KeyChangesOrder) {
  const KeyedPermutation a(1000, 1), b(1000, 2);
  int same = 0;
  for (uint64_t x = 0; x < 1000; ++x) same += a(x) == b(x);
  EXPECT_LT(same, 20);
}

TEST(FStarTest, SubLabelsRealiseNegativeCount) {
  const Fixture fx = Make(0.05, 500);
  Rng rng(9);
  const FStarInstance f = SampleFStar(fx.partition, fx.probs, rng);
  for (int64_t c = 0; c < fx.partition->cell_count(); ++c) {
    int64_t neg = 0;
    for (int64_t j = 0; j < 500; ++j) {
      neg += f.SubLabel(c, j) == Label::kNegative;
    }
    EXPECT_EQ(neg, f.neg_count()[c]);
    EXPECT_DOUBLE_EQ(f.CellLoss(c), neg / 500.0);
  }
}

TEST(FStarTest, EvaluateUsesSubCellLabel) {
  const Fixture fx = Make(0.05, 64);
  Rng rng(10);
  const FStarInstance f = SampleFStarInWorld(fx.partition, fx.probs, 0, rng);
  EXPECT_EQ(f.world(), 0);
  for (int i = 0; i < 2000; ++i) {
    const Point x = fx.partition->dist().Sample(rng);
    const auto [cell, sub] = fx.partition->LocateBoth(x);
    ASSERT_GE(cell, 0);
    EXPECT_EQ(f.Evaluate(x), f.SubLabel(cell, sub));
  }
  EXPECT_EQ(f.Evaluate(Point({5.0, 5.0})), Label::kPositive);
}

TEST(FStarTest, WorldSelectsProbabilityList) {
  const Fixture fx = Make(0.05, 10);
  Rng rng(11);
  const FStarInstance f1 = SampleFStarInWorld(fx.partition, fx.probs, 1, rng);
  const FStarInstance f0 = SampleFStarInWorld(fx.partition, fx.probs, 0, rng);
  for (int64_t c = 0; c < fx.partition->cell_count(); ++c) {
    EXPECT_EQ(f1.CellProbability(c), fx.probs->p[f1.k_index()[c]]);
    EXPECT_EQ(f0.CellProbability(c), fx.probs->q[f0.k_index()[c]]);
  }
}

// Hoeffding at K = 1e4: |N/K - r| <= 0.03 fails with probability e^-18.
TEST(FStarTest, CellLossConcentratesAtLargeK) {
  const Fixture fx = Make(0.01, 10000);
  Rng rng(12);
  const FStarInstance f = SampleFStar(fx.partition, fx.probs, rng);
  for (int64_t c = 0; c < fx.partition->cell_count(); ++c) {
    EXPECT_NEAR(f.CellLoss(c), f.CellProbability(c), 0.03);
  }
  const LossProfile profile = f.ExactLossProfile();
  for (double a : {0.0, 0.01, 0.02, 0.05}) {
    EXPECT_DOUBLE_EQ(profile.LossAtLeast(a), f.ExactLossAtLeast(a));
  }
}

TEST(FStarTest, CreateValidatesVectors) {
  const Fixture fx = Make(0.2, 4);
  const size_t n = fx.partition->cell_count();
  EXPECT_TRUE(FStarInstance::Create(fx.partition, fx.probs, 1,
                                    std::vector<int>(n, 0),
                                    std::vector<int64_t>(n, 0),
                                    std::vector<uint64_t>(n, 0))
                  .ok());
  EXPECT_TRUE(HasErrorKind(
      FStarInstance::Create(fx.partition, fx.probs, 2, std::vector<int>(n, 0),
                            std::vector<int64_t>(n, 0),
                            std::vector<uint64_t>(n, 0))
          .status(),
      ErrorKind::kParameterOutOfRange));
  EXPECT_FALSE(FStarInstance::Create(fx.partition, fx.probs, 1,
                                     std::vector<int>(n, 0),
                                     std::vector<int64_t>(n, 5),
                                     std::vector<uint64_t>(n, 0))
                   .ok());
  EXPECT_TRUE(HasErrorKind(
      FStarInstance::Create(fx.partition, fx.probs, 1,
                            std::vector<int>(n + 1, 0),
                            std::vector<int64_t>(n, 0),
                            std::vector<uint64_t>(n, 0))
          .status(),
      ErrorKind::kDimensionMismatch));
}

TEST(FStarTest, HonestExplainerReturnsCell) {
  const Fixture fx = Make(0.05, 4);
  const HonestExplainer e(fx.partition);
  const FunctionClassifier g([](const Point&) { return Label::kPositive; });
  const Point x({0.3, 0.9});
  const LocalExplanation ex = e.Explain(g, x);
  ASSERT_TRUE(std::holds_alternative<HyperRectangle>(ex.region));
  EXPECT_EQ(std::get<HyperRectangle>(ex.region),
            fx.partition->cell(fx.partition->Locate(x)));
}

// log(2 * 100 / 0.01) / (2 (1e-5)^2) = 49517437762.68...
TEST(ChooseKTest, RegressionValue) {
  auto K = ChooseK(0.1, 0.01, 0.01, 0.01, 100);
  ASSERT_TRUE(K.ok());
  EXPECT_EQ(*K, 49517437763);
  EXPECT_NEAR(ChooseKReal(0.1, 0.01, 0.01, 0.01, 100), 49517437762.68064,
              1e-3);
}

// Doubling the cell count adds log(2) / (2 slack^2).
TEST(ChooseKTest, DoublingCellsAddsConstant) {
  for (int64_t L : {10, 1000, 16384}) {
    const double slack = 0.01 * 0.05 * 0.01;
    const double diff = ChooseKReal(0.05, 0.02, 0.01, 0.05, 2 * L) -
                        ChooseKReal(0.05, 0.02, 0.01, 0.05, L);
    EXPECT_NEAR(diff / (std::numbers::ln2 / (2 * slack * slack)), 1.0, 1e-9);
  }
}

TEST(ChooseKTest, RejectsBadParameters) {
  EXPECT_FALSE(ChooseK(0.0, 0.01, 0.01, 0.01, 10).ok());
  EXPECT_FALSE(ChooseK(0.1, 0.01, 0.01, 1.0, 10).ok());
  EXPECT_FALSE(ChooseK(0.1, 0.01, 0.01, 0.01, 0).ok());
  EXPECT_FALSE(ChooseK(1e-9, 1e-9, 1e-9, 0.01, 10).ok());
}

}  // namespace
}  // namespace locaudit

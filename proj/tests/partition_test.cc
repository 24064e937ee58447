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

#include "gtest/gtest.h"
#include "locaudit/adversary/partition.h"
#include "locaudit/core/errors.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/product_distribution.h"

namespace locaudit {
namespace {

ProductDistribution Gaussian2() {
  return *ProductDistribution::Create(
      {*Marginal::Gaussian(0.0, 1.0), *Marginal::Gaussian(2.0, 0.5)});
}

TEST(PartitionTest, TwoHalvesOnUniformSquare) {
  auto p = PartitionSpec::Build(ProductDistribution::UniformCube(2), 0.2, 1);
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p->cell_count(), 2);
  EXPECT_DOUBLE_EQ(p->mass(0), 0.5);
  EXPECT_DOUBLE_EQ(p->mass(1), 0.5);
  EXPECT_DOUBLE_EQ(p->cell(0).hi(0), 0.5);
}

// Every cell mass lies in [alpha, 4 alpha], the cells tile the support and
// the masses sum to the support mass.
class PartitionInvariantTest
    : public ::testing::TestWithParam<std::pair<int, double>> {};

TEST_P(PartitionInvariantTest, MassesBracketAlpha) {
  const auto [which, alpha] = GetParam();
  const ProductDistribution dist =
      which == 0 ? ProductDistribution::UniformCube(3) : Gaussian2();
  auto p = PartitionSpec::Build(dist, alpha, 16);
  ASSERT_TRUE(p.ok());
  EXPECT_TRUE(p->CheckInvariants().ok());
  double total = 0.0;
  for (int64_t i = 0; i < p->cell_count(); ++i) {
    EXPECT_GE(p->mass(i), alpha * p->support_mass() - 1e-12);
    EXPECT_LE(p->mass(i), 4 * alpha + 1e-12);
    total += p->mass(i);
  }
  EXPECT_NEAR(total, p->support_mass(), 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Alphas, PartitionInvariantTest,
                         ::testing::Values(std::make_pair(0, 0.01),
                                           std::make_pair(0, 0.003),
                                           std::make_pair(1, 0.02),
                                           std::make_pair(1, 1e-4)));

TEST(PartitionTest, LocateAgreesWithContains) {
  auto p = PartitionSpec::Build(Gaussian2(), 0.01, 1);
  ASSERT_TRUE(p.ok());
  Rng rng(3);
  for (int i = 0; i < 5000; ++i) {
    const Point x = p->dist().Sample(rng);
    const int64_t c = p->Locate(x);
    if (c < 0) {
      EXPECT_FALSE(p->support().Contains(x));
      continue;
    }
    EXPECT_TRUE(p->cell(c).Contains(x));
  }
  EXPECT_EQ(p->Locate(Point({100.0, 0.0})), -1);
}

TEST(PartitionTest, SubCellsTileCellWithEqualMass) {
  auto base = PartitionSpec::Build(Gaussian2(), 0.05, 1);
  ASSERT_TRUE(base.ok());
  for (int64_t K : {2, 7, 64}) {
    const PartitionSpec p = base->WithK(K);
    for (int64_t cell : {int64_t{0}, p.cell_count() - 1}) {
      double total = 0.0;
      for (int64_t j = 0; j < K; ++j) {
        const HyperRectangle s = p.SubCell(cell, j);
        const double m = *p.dist().Mass(s);
        EXPECT_NEAR(m, p.SubMass(cell), 1e-12) << K << " " << j;
        total += m;
      }
      EXPECT_NEAR(total, p.mass(cell), 1e-12);
    }
  }
}

TEST(PartitionTest, LocateSubMatchesSubCell) {
  auto p = PartitionSpec::Build(ProductDistribution::UniformCube(2), 0.02, 37);
  ASSERT_TRUE(p.ok());
  Rng rng(5);
  for (int i = 0; i < 3000; ++i) {
    const Point x = p->dist().Sample(rng);
    const auto [cell, sub] = p->LocateBoth(x);
    ASSERT_GE(cell, 0);
    ASSERT_GE(sub, 0);
    ASSERT_LT(sub, 37);
    EXPECT_TRUE(p->SubCell(cell, sub).Contains(x));
  }
}

TEST(PartitionTest, RejectsBadParameters) {
  const ProductDistribution u = ProductDistribution::UniformCube(1);
  EXPECT_TRUE(HasErrorKind(PartitionSpec::Build(u, 0.0, 1).status(),
                           ErrorKind::kParameterOutOfRange));
  EXPECT_TRUE(HasErrorKind(PartitionSpec::Build(u, 0.1, 0).status(),
                           ErrorKind::kParameterOutOfRange));
  EXPECT_FALSE(PartitionSpec::Build(u, 1e-15, 1).ok());
}

TEST(PartitionTest, SplitRectangleHalvesMass) {
  const ProductDistribution d = Gaussian2();
  auto halves = SplitRectangle(d, HyperRectangle::Everything(2), 1);
  ASSERT_TRUE(halves.ok());
  EXPECT_NEAR(*d.Mass(halves->first), 0.5, 1e-9);
  EXPECT_NEAR(halves->first.hi(1), 2.0, 1e-9);
  auto empty = SplitRectangle(
      ProductDistribution::UniformCube(1),
      *HyperRectangle::Create({2.0}, {3.0}), 0);
  EXPECT_TRUE(HasErrorKind(empty.status(), ErrorKind::kZeroMassRectangle));
}

}  // namespace
}  // namespace locaudit

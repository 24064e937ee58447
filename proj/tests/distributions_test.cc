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
#include <vector>

#include "boost/math/distributions/normal.hpp"
#include "gtest/gtest.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/marginal.h"
#include "locaudit/distributions/product_distribution.h"
#include "locaudit/distributions/sphere_sampling.h"
#include "locaudit/distributions/spheres_distribution.h"

namespace locaudit {
namespace {

TEST(MarginalTest, RejectsBadParameters) {
  EXPECT_FALSE(Marginal::Uniform(1.0, 1.0).ok());
  EXPECT_FALSE(Marginal::Gaussian(0.0, 0.0).ok());
  EXPECT_FALSE(Marginal::Gaussian(0.0, -1.0).ok());
}

// Boost's normal distribution is the reference; the library uses erfc.
TEST(MarginalTest, GaussianMatchesBoostIncludingTails) {
  const Marginal m = *Marginal::Gaussian(1.0, 2.0);
  const boost::math::normal_distribution<double> ref(1.0, 2.0);
  for (double x : {-30.0, -10.0, -1.0, 0.0, 1.0, 2.5, 12.0}) {
    EXPECT_NEAR(m.Cdf(x) / boost::math::cdf(ref, x), 1.0, 1e-12) << x;
  }
  for (double x : {3.0, 15.0, 30.0}) {
    EXPECT_NEAR(m.Survival(x) / boost::math::cdf(complement(ref, x)), 1.0,
                1e-12)
        << x;
  }
  const double far = m.IntervalMass(17.0, 19.0);
  const double want = boost::math::cdf(complement(ref, 17.0)) -
                      boost::math::cdf(complement(ref, 19.0));
  EXPECT_NEAR(far / want, 1.0, 1e-10);
}

TEST(MarginalTest, QuantileInvertsCdf) {
  for (const Marginal& m :
       {*Marginal::Uniform(-2.0, 3.0), *Marginal::Gaussian(0.5, 0.1)}) {
    for (double u : {1e-9, 0.01, 0.3, 0.5, 0.77, 0.999999}) {
      EXPECT_NEAR(m.Cdf(m.Quantile(u)), u, 1e-13 + 1e-12 * u);
    }
  }
}

TEST(MarginalTest, IntervalQuantileSplitsMass) {
  const Marginal m = *Marginal::Gaussian(0.0, 1.0);
  const double c = m.IntervalQuantile(-1.0, 4.0, 0.25);
  EXPECT_NEAR(m.IntervalMass(-1.0, c), 0.25 * m.IntervalMass(-1.0, 4.0),
              1e-14);
  EXPECT_DOUBLE_EQ(m.IntervalMass(2.0, 1.0), 0.0);
}

TEST(MarginalTest, TruncatedSampleStaysInside) {
  const Marginal m = *Marginal::Gaussian(0.0, 1.0);
  Rng rng(2);
  for (int i = 0; i < 2000; ++i) {
    const double x = m.TruncatedSample(6.0, 6.5, rng);
    ASSERT_GT(x, 6.0);
    ASSERT_LE(x, 6.5);
  }
}

// uniform [0,1]^2: (0,0.5]x(0,1] -> 0.5 and (0,0.25]x(0,0.5] -> 0.125.
TEST(ProductDistributionTest, RectMassIsProductOfMarginals) {
  const ProductDistribution d = ProductDistribution::UniformCube(2);
  EXPECT_DOUBLE_EQ(*d.Mass(*HyperRectangle::Create({0, 0}, {0.5, 1})), 0.5);
  EXPECT_DOUBLE_EQ(*d.Mass(*HyperRectangle::Create({0, 0}, {0.25, 0.5})),
                   0.125);
  EXPECT_FALSE(d.Mass(HyperRectangle::UnitCube(3)).ok());
}

TEST(ProductDistributionTest, SplitPointHalvesGaussianBox) {
  auto d = ProductDistribution::Create(
      {*Marginal::Gaussian(0.0, 1.0), *Marginal::Uniform(0.0, 2.0)});
  ASSERT_TRUE(d.ok());
  const HyperRectangle box = d->SupportBox();
  EXPECT_NEAR(*d->Mass(box), 1.0, 1e-9);
  const double c = d->SplitPoint(box, 0, 0.5);
  EXPECT_NEAR(c, 0.0, 1e-9);
  auto halves = box.Split(0, c);
  ASSERT_TRUE(halves.ok());
  EXPECT_NEAR(*d->Mass(halves->first), *d->Mass(halves->second), 1e-12);
}

TEST(ProductDistributionTest, ConditionalSamplesLieInRectangle) {
  auto d = ProductDistribution::Create(
      {*Marginal::Gaussian(0.0, 1.0), *Marginal::Gaussian(3.0, 0.5)});
  ASSERT_TRUE(d.ok());
  const HyperRectangle r = *HyperRectangle::Create({-5.0, 3.0}, {-4.0, 3.1});
  Rng rng(8);
  for (int i = 0; i < 1000; ++i) {
    auto x = d->RectConditionalSample(r, rng);
    ASSERT_TRUE(x.ok());
    ASSERT_TRUE(r.Contains(*x));
  }
}

TEST(SphereSamplingTest, PointsOnSphereAndCentered) {
  Rng rng(4);
  const int d = 5;
  const int n = 100000;
  std::vector<double> mean(d, 0.0);
  for (int i = 0; i < n; ++i) {
    auto x = SampleUniformSphere(d, 1.0, rng);
    ASSERT_TRUE(x.ok());
    ASSERT_NEAR(x->Norm(), 1.0, 1e-12);
    for (int j = 0; j < d; ++j) mean[j] += (*x)[j] / n;
  }
  double norm = 0.0;
  for (double v : mean) norm += v * v;
  // 3 sqrt(1 / (d n)) CLT slack.
  EXPECT_LE(std::sqrt(norm), 0.02);
  EXPECT_FALSE(SampleUniformSphere(0, 1.0, rng).ok());
}

TEST(SphereSamplingTest, OrthogonalUnitIsOrthogonal) {
  Rng rng(6);
  const std::vector<double> axis = {0.6, 0.8, 0.0, 0.0};
  for (int i = 0; i < 100; ++i) {
    const std::vector<double> u = SampleOrthogonalUnit(axis, rng);
    double dot = 0.0, nn = 0.0;
    for (int j = 0; j < 4; ++j) {
      dot += u[j] * axis[j];
      nn += u[j] * u[j];
    }
    EXPECT_NEAR(dot, 0.0, 1e-14);
    EXPECT_NEAR(nn, 1.0, 1e-14);
  }
}

TEST(SpheresDistributionTest, RadiiAndEqualWeights) {
  auto d = SpheresDistribution::Create(5);
  ASSERT_TRUE(d.ok());
  EXPECT_DOUBLE_EQ(d->alpha(), 1.0 / (3670016.0 * 625.0));
  EXPECT_DOUBLE_EQ(d->beta(), 1.0 / (3584.0 * 25.0));
  Rng rng(1);
  int counts[3] = {0, 0, 0};
  const int n = 30000;
  for (int i = 0; i < n; ++i) {
    int s = -1;
    const Point x = d->SampleWithIndex(rng, &s);
    ASSERT_NEAR(x.Norm(), d->radii()[s], 1e-12);
    ++counts[s];
  }
  for (int c : counts) {
    EXPECT_NEAR(c / static_cast<double>(n), 1.0 / 3.0,
                4 * std::sqrt(2.0 / 9.0 / n));
  }
  EXPECT_FALSE(SpheresDistribution::Create(1).ok());
}

}  // namespace
}  // namespace locaudit

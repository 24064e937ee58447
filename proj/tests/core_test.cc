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
#include <limits>
#include <vector>

#include "gtest/gtest.h"
#include "locaudit/core/classifiers.h"
#include "locaudit/core/errors.h"
#include "locaudit/core/explainers.h"
#include "locaudit/core/geometry.h"
#include "locaudit/core/loss_profile.h"
#include "locaudit/core/measures.h"
#include "locaudit/core/parallel.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/product_distribution.h"
#include "locaudit/distributions/spheres_distribution.h"

namespace locaudit {
namespace {

TEST(PointTest, CreateRejectsNonFinite) {
  EXPECT_TRUE(Point::Create({1.0, 2.0}).ok());
  EXPECT_FALSE(Point::Create({1.0, std::nan("")}).ok());
  EXPECT_FALSE(
      Point::Create({std::numeric_limits<double>::infinity()}).ok());
}

TEST(HyperRectangleTest, HalfOpenContainment) {
  const HyperRectangle r = HyperRectangle::UnitCube(2);
  EXPECT_TRUE(r.Contains(Point({1.0, 1.0})));
  EXPECT_FALSE(r.Contains(Point({0.0, 0.5})));
  EXPECT_FALSE(r.Contains(Point({0.5, 1.5})));
}

TEST(HyperRectangleTest, SplitTilesParent) {
  const HyperRectangle r = HyperRectangle::UnitCube(2);
  auto halves = r.Split(1, 0.25);
  ASSERT_TRUE(halves.ok());
  const Point a({0.3, 0.25});
  const Point b({0.3, 0.2500001});
  EXPECT_TRUE(halves->first.Contains(a));
  EXPECT_FALSE(halves->second.Contains(a));
  EXPECT_TRUE(halves->second.Contains(b));
  EXPECT_FALSE(r.Split(1, 1.0).ok());
  EXPECT_FALSE(r.Split(2, 0.5).ok());
}

TEST(HyperRectangleTest, CreateValidates) {
  EXPECT_FALSE(HyperRectangle::Create({0.0}, {0.0}).ok());
  EXPECT_FALSE(HyperRectangle::Create({0.0, 0.0}, {1.0}).ok());
}

TEST(BallTest, ClosedBall) {
  auto b = Ball::Create(Point({0.0, 0.0}), 1.0);
  ASSERT_TRUE(b.ok());
  EXPECT_TRUE(b->Contains(Point({1.0, 0.0})));
  EXPECT_FALSE(b->Contains(Point({1.0, 0.01})));
  EXPECT_FALSE(Ball::Create(Point({0.0}), -1.0).ok());
}

TEST(ErrorsTest, KindRoundTrips) {
  const absl::Status s = MakeError(ErrorKind::kConfigInvalid, "bad");
  EXPECT_FALSE(s.ok());
  EXPECT_TRUE(HasErrorKind(s, ErrorKind::kConfigInvalid));
  EXPECT_FALSE(HasErrorKind(s, ErrorKind::kRecordUnreadable));
  EXPECT_FALSE(ErrorKindOf(absl::InternalError("x")).has_value());
  EXPECT_EQ(ErrorKindName(ErrorKind::kZeroMassBall), "ZeroMassBall");
}

TEST(RandomTest, DeriveSeedIsPure) {
  EXPECT_EQ(DeriveSeed(7, 3), DeriveSeed(7, 3));
  EXPECT_NE(DeriveSeed(7, 3), DeriveSeed(7, 4));
  EXPECT_NE(DeriveSeed(7, 3), DeriveSeed(8, 3));
}

TEST(RandomTest, UniformRanges) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = Uniform01(rng);
    const double v = UniformOpen01(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_GT(v, 0.0);
    ASSERT_LT(v, 1.0);
  }
}

TEST(RandomTest, BinomialMeanWithinFourSigma) {
  Rng rng(5);
  const int64_t trials = 1000;
  const double p = 0.3;
  double sum = 0.0;
  const int reps = 2000;
  for (int i = 0; i < reps; ++i) sum += Binomial(rng, trials, p);
  const double mean = sum / reps;
  const double sd = std::sqrt(trials * p * (1 - p) / reps);
  EXPECT_NEAR(mean, trials * p, 4 * sd);
  EXPECT_EQ(Binomial(rng, 10, 0.0), 0);
  EXPECT_EQ(Binomial(rng, 10, 1.0), 10);
}

TEST(ParallelTest, SameResultForAnyWorkerCount) {
  auto run = [](int workers) {
    std::vector<uint64_t> out(257);
    ParallelFor(257, workers, [&](int64_t i) {
      Rng rng(DeriveSeed(99, i));
      out[i] = rng();
    });
    return out;
  };
  EXPECT_EQ(run(1), run(4));
}

TEST(LossProfileTest, LossAtLeast) {
  LossProfile p({{0.25, 0.0}, {0.25, 0.0}, {0.25, 1.0}, {0.25, 1.0}});
  EXPECT_DOUBLE_EQ(p.LossAtLeast(0.3), 0.5);
  EXPECT_DOUBLE_EQ(p.LossAtLeast(0.0), 1.0);
  EXPECT_DOUBLE_EQ(p.LossAtLeast(1.0), 0.5);
  EXPECT_DOUBLE_EQ(p.LossAtLeast(1.01), 0.0);
  EXPECT_DOUBLE_EQ(p.TotalMass(), 1.0);
}

TEST(ClassifierTest, LinearTieGoesPositive) {
  auto g = LinearClassifier::Create({3.0, 4.0}, 1.0);
  ASSERT_TRUE(g.ok());
  EXPECT_DOUBLE_EQ(g->w()[0], 0.6);
  EXPECT_EQ(g->Predict(Point({1.0 / 0.6, 0.0})), Label::kPositive);
  EXPECT_EQ(g->Predict(Point({0.0, 0.0})), Label::kNegative);
  EXPECT_FALSE(LinearClassifier::Create({0.0, 0.0}, 0.0).ok());
}

TEST(ExplanationTest, AnchorMustLieInRegion) {
  const Region box = HyperRectangle::UnitCube(1);
  EXPECT_TRUE(MakeExplanation(Point({0.5}), box, ConstantClassifier{}).ok());
  EXPECT_FALSE(MakeExplanation(Point({1.5}), box, ConstantClassifier{}).ok());
}

TEST(ExplanationTest, KeysIdentifyRegionAndLocal) {
  const Region box = HyperRectangle::UnitCube(1);
  auto a = MakeExplanation(Point({0.2}), box, ConstantClassifier{});
  auto b = MakeExplanation(Point({0.7}), box, ConstantClassifier{});
  auto c = MakeExplanation(Point({0.7}), box,
                           ConstantClassifier{Label::kNegative});
  ASSERT_TRUE(a.ok() && b.ok() && c.ok());
  EXPECT_EQ(ExplanationKey(*a), ExplanationKey(*b));
  EXPECT_NE(ExplanationKey(*a), ExplanationKey(*c));
}

std::vector<HyperRectangle> Slabs(int count) {
  std::vector<HyperRectangle> cells;
  for (int i = 0; i < count; ++i) {
    cells.push_back(*HyperRectangle::Create({static_cast<double>(i) / count},
                                            {(i + 1.0) / count}));
  }
  return cells;
}

TEST(ExplainerTest, PartitionExplainerConformsAndLocates) {
  auto e = PartitionExplainer::Create(Slabs(4), LocalRule::kConstantPositive);
  ASSERT_TRUE(e.ok());
  const FunctionClassifier f([](const Point&) { return Label::kNegative; });
  const LocalExplanation ex = e->Explain(f, Point({0.6}));
  EXPECT_TRUE(ConformsToClass(ex, ExplainerClass::kRectConstant));
  EXPECT_FALSE(ConformsToClass(ex, ExplainerClass::kBallLinear));
  EXPECT_EQ(e->Locate(Point({0.6})), 2);
  EXPECT_EQ(e->Locate(Point({2.0})), -1);
  EXPECT_EQ(std::get<ConstantClassifier>(ex.local).label, Label::kPositive);
}

TEST(ExplainerTest, LocalRules) {
  const FunctionClassifier f([](const Point&) { return Label::kNegative; });
  const Point x({0.5});
  EXPECT_EQ(ApplyRule(LocalRule::kMatchAnchor, f, x).label, Label::kNegative);
  EXPECT_EQ(ApplyRule(LocalRule::kInvertAnchor, f, x).label, Label::kPositive);
  EXPECT_TRUE(ParseLocalRule("match").ok());
  EXPECT_FALSE(ParseLocalRule("bogus").ok());
}

// uniform [0,1], region (0,1], g = +1, f = -1 on (0,0.5]: exact loss 1/2.
TEST(MeasuresTest, LocalLossMatchesExactMass) {
  const ProductDistribution dist = ProductDistribution::UniformCube(1);
  const FunctionClassifier f([](const Point& x) {
    return x[0] <= 0.5 ? Label::kNegative : Label::kPositive;
  });
  auto ex = MakeExplanation(Point({0.5}), HyperRectangle::UnitCube(1),
                            ConstantClassifier{});
  ASSERT_TRUE(ex.ok());
  Rng rng(3);
  auto est = LocalLoss(*ex, f, dist, 20000, rng);
  ASSERT_TRUE(est.ok());
  EXPECT_NEAR(est->value, 0.5, 3 * est->std_error + 1e-12);
  EXPECT_EQ(est->samples_used, 20000);
}

// Four equal slabs, f = -1 on two whole slabs, g = +1: L_0.3 = 1/2.
TEST(MeasuresTest, ExplainabilityLossOnSlabs) {
  const ProductDistribution dist = ProductDistribution::UniformCube(1);
  const FunctionClassifier f([](const Point& x) {
    return x[0] <= 0.5 ? Label::kNegative : Label::kPositive;
  });
  auto e = PartitionExplainer::Create(Slabs(4), LocalRule::kConstantPositive);
  ASSERT_TRUE(e.ok());
  Rng rng(11);
  auto r = ExplainabilityLoss(*e, f, dist, 0.3, 4000, 50, rng);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r->estimate.value, 0.5, 4 * r->estimate.std_error);
}

TEST(MeasuresTest, LocalMassExactForRectangles) {
  const ProductDistribution dist = ProductDistribution::UniformCube(2);
  Rng rng(1);
  const MassEstimate half = LocalMass(
      *HyperRectangle::Create({0.0, 0.0}, {0.5, 1.0}), dist, rng);
  EXPECT_TRUE(half.exact);
  EXPECT_DOUBLE_EQ(half.value, 0.5);
  const MassEstimate eighth = LocalMass(
      *HyperRectangle::Create({0.0, 0.0}, {0.25, 0.5}), dist, rng);
  EXPECT_DOUBLE_EQ(eighth.value, 0.125);
}

// The ball just inside the middle sphere holds the inner sphere only.
TEST(MeasuresTest, LocalMassOfInnerSphereBall) {
  auto dist = SpheresDistribution::Create(5);
  ASSERT_TRUE(dist.ok());
  Rng rng(1);
  auto ball = Ball::Create(Point(std::vector<double>(5, 0.0)),
                           1.0 - dist->alpha() / 2.0);
  ASSERT_TRUE(ball.ok());
  const MassEstimate m = LocalMass(*ball, *dist, rng);
  EXPECT_TRUE(m.exact);
  EXPECT_NEAR(m.value, 1.0 / 3.0, 1e-15);
}

TEST(MeasuresTest, LocalityOfEqualCellsIsOneOverL) {
  const ProductDistribution dist = ProductDistribution::UniformCube(1);
  const FunctionClassifier f([](const Point&) { return Label::kPositive; });
  auto e = PartitionExplainer::Create(Slabs(8), LocalRule::kMatchAnchor);
  ASSERT_TRUE(e.ok());
  Rng rng(2);
  EXPECT_NEAR(Locality(*e, f, dist, 500, rng), 1.0 / 8.0, 1e-15);
}

TEST(MeasuresTest, SampleInRegionFailsOnZeroMass) {
  const ProductDistribution dist = ProductDistribution::UniformCube(1);
  auto ball = Ball::Create(Point({5.0}), 0.5);
  ASSERT_TRUE(ball.ok());
  Rng rng(4);
  auto s = SampleInRegion(*ball, dist, rng, 1000);
  EXPECT_TRUE(HasErrorKind(s.status(), ErrorKind::kRegionMassZero));
}

}  // namespace
}  // namespace locaudit

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
#include <memory>

#include "gtest/gtest.h"
#include "json.hpp"
#include "locaudit/adversary/f_star.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/adversary/partition.h"
#include "locaudit/adversary/serialize.h"
#include "locaudit/core/errors.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/product_distribution.h"

namespace locaudit {
namespace {

using nlohmann::json;

ProductDistribution Mixed() {
  return *ProductDistribution::Create(
      {*Marginal::Gaussian(0.1, 0.3), *Marginal::Uniform(-1.0, 2.0)});
}

TEST(SerializeTest, ExactDecimalRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.015,
                   std::nextafter(1.0 / 48.0, 0.0)}) {
    auto back = ParseExactDecimal(json(ExactDecimal(v)));
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*back, v);
  }
  EXPECT_TRUE(HasErrorKind(ParseExactDecimal(json("0.1x")).status(),
                           ErrorKind::kRecordUnreadable));
  EXPECT_FALSE(ParseExactDecimal(json(0.1)).ok());
}

TEST(SerializeTest, DistributionRoundTrip) {
  auto back = DistributionFromJson(DistributionToJson(Mixed()));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->DebugString(), Mixed().DebugString());
  json bad = DistributionToJson(Mixed());
  bad["marginals"][0]["kind"] = "cauchy";
  EXPECT_TRUE(HasErrorKind(DistributionFromJson(bad).status(),
                           ErrorKind::kRecordUnreadable));
}

TEST(SerializeTest, PartitionRoundTripIsBitExact) {
  auto p = PartitionSpec::Build(Mixed(), 0.01, 77);
  ASSERT_TRUE(p.ok());
  const json j = PartitionToJson(*p);
  auto back = PartitionFromJson(json::parse(j.dump()));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->cells(), p->cells());
  EXPECT_EQ(back->masses(), p->masses());
  EXPECT_EQ(back->K(), 77);
  EXPECT_EQ(back->alpha(), 0.01);
}

TEST(SerializeTest, TamperedPartitionIsRejected) {
  auto p = PartitionSpec::Build(ProductDistribution::UniformCube(2), 0.05, 3);
  ASSERT_TRUE(p.ok());
  json masses = PartitionToJson(*p);
  masses["masses"][0] = "0.2";
  EXPECT_TRUE(HasErrorKind(PartitionFromJson(masses).status(),
                           ErrorKind::kRecordUnreadable));
  json splits = PartitionToJson(*p);
  splits["splits"][1] = "7";
  EXPECT_TRUE(HasErrorKind(PartitionFromJson(splits).status(),
                           ErrorKind::kRecordUnreadable));
  json version = PartitionToJson(*p);
  version["version"] = 99;
  EXPECT_FALSE(PartitionFromJson(version).ok());
  json missing = PartitionToJson(*p);
  missing.erase("depth");
  EXPECT_TRUE(HasErrorKind(PartitionFromJson(missing).status(),
                           ErrorKind::kRecordUnreadable));
}

TEST(SerializeTest, FStarRoundTripEvaluatesIdentically) {
  auto partition = std::make_shared<const PartitionSpec>(
      *PartitionSpec::Build(ProductDistribution::UniformCube(2), 0.02, 1000));
  auto probs = std::make_shared<const MomentMatchedProbs>(
      *BuildMomentMatchedProbs(0.02, 0.015, 1.0 / 64.0));
  Rng rng(31);
  const FStarInstance f = SampleFStar(partition, probs, rng);
  auto back = FStarFromJson(json::parse(FStarToJson(f).dump()));
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->world(), f.world());
  EXPECT_EQ(back->k_index(), f.k_index());
  EXPECT_EQ(back->neg_count(), f.neg_count());
  EXPECT_EQ(back->label_keys(), f.label_keys());
  EXPECT_EQ(back->probs().p, f.probs().p);
  for (int i = 0; i < 2000; ++i) {
    const Point x = partition->dist().Sample(rng);
    ASSERT_EQ(back->Evaluate(x), f.Evaluate(x));
  }
  json bad = FStarToJson(f);
  bad["label_keys"][0] = "nope";
  EXPECT_TRUE(HasErrorKind(FStarFromJson(bad).status(),
                           ErrorKind::kRecordUnreadable));
}

}  // namespace
}  // namespace locaudit

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

// Versioned JSON records for replaying hard instances bit-exactly. Every
// real number is stored as a "%.17g" decimal string, which round-trips any
// double.

#ifndef LOCAUDIT_ADVERSARY_SERIALIZE_H_
#define LOCAUDIT_ADVERSARY_SERIALIZE_H_

#include <string>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "locaudit/adversary/f_star.h"
#include "locaudit/adversary/partition.h"
#include "locaudit/distributions/product_distribution.h"

namespace locaudit {

inline constexpr int kInstanceRecordVersion = 1;

std::string ExactDecimal(double v);
absl::StatusOr<double> ParseExactDecimal(const nlohmann::json& j);

nlohmann::json DistributionToJson(const ProductDistribution& dist);
absl::StatusOr<ProductDistribution> DistributionFromJson(
    const nlohmann::json& j);

// Splits, support box and masses. Loading rebuilds the cells from the
// splits and rejects the record unless every mass matches bit-for-bit.
nlohmann::json PartitionToJson(const PartitionSpec& p);
absl::StatusOr<PartitionSpec> PartitionFromJson(const nlohmann::json& j);

// Includes the partition and the (gamma, eps1, eps2) that rebuild the
// probability system.
nlohmann::json FStarToJson(const FStarInstance& f);
absl::StatusOr<FStarInstance> FStarFromJson(const nlohmann::json& j);

}  // namespace locaudit

#endif  // LOCAUDIT_ADVERSARY_SERIALIZE_H_

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

#ifndef LOCAUDIT_DISTRIBUTIONS_ORACLE_H_
#define LOCAUDIT_DISTRIBUTIONS_ORACLE_H_

#include <optional>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "locaudit/core/geometry.h"
#include "locaudit/core/random.h"

namespace locaudit {

// A data distribution mu over R^d. Sampling is mandatory; exact masses and
// conditional samplers are optional capabilities. Callers fall back to Monte
// Carlo or rejection sampling when a capability is missing.
class DistributionOracle {
 public:
  virtual ~DistributionOracle() = default;

  virtual int dim() const = 0;
  virtual Point Sample(Rng& rng) const = 0;

  virtual std::optional<double> RectMass(const HyperRectangle&) const {
    return std::nullopt;
  }
  virtual absl::StatusOr<Point> RectConditionalSample(const HyperRectangle&,
                                                      Rng&) const {
    return absl::UnimplementedError("no conditional rectangle sampler");
  }
  virtual std::optional<double> BallMass(const Ball&) const {
    return std::nullopt;
  }
  virtual absl::StatusOr<Point> BallConditionalSample(const Ball&,
                                                      Rng&) const {
    return absl::UnimplementedError("no conditional ball sampler");
  }
};

}  // namespace locaudit

#endif  // LOCAUDIT_DISTRIBUTIONS_ORACLE_H_

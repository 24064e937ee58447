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

// Local loss, explainability loss, local mass, and locality.

#ifndef LOCAUDIT_CORE_MEASURES_H_
#define LOCAUDIT_CORE_MEASURES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/core/classifiers.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/oracle.h"

namespace locaudit {

inline constexpr int64_t kDefaultRejectionBudget = 1'000'000;

struct LossEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int64_t samples_used = 0;
};

// Binomial estimate from `hits` out of `n`.
LossEstimate BinomialEstimate(int64_t hits, int64_t n);

// One draw from mu conditioned on `region`: the oracle's exact sampler when
// it has one, otherwise rejection sampling. RegionMassZero after
// `max_attempts` consecutive misses.
absl::StatusOr<Point> SampleInRegion(const Region& region,
                                     const DistributionOracle& dist, Rng& rng,
                                     int64_t max_attempts);

// Monte Carlo Pr[g(x') != f(x') | x' in R] over exactly n_inner draws.
absl::StatusOr<LossEstimate> LocalLoss(
    const LocalExplanation& expl, const Classifier& f,
    const DistributionOracle& dist, int64_t n_inner, Rng& rng,
    int64_t max_attempts = kDefaultRejectionBudget);

struct ExplainabilityResult {
  LossEstimate estimate;
  std::vector<double> anchor_losses;  // per sampled anchor
  int64_t zero_mass_anchors = 0;      // counted with loss 1
};

// Fraction of per-anchor losses that are >= gamma.
LossEstimate ExplainabilityLossFromLosses(std::span<const double> losses,
                                          double gamma);

// Estimate of mu({x : L(E, f, x) >= gamma}) from n_outer anchors.
absl::StatusOr<ExplainabilityResult> ExplainabilityLoss(
    const Explainer& e, const Classifier& f, const DistributionOracle& dist,
    double gamma, int64_t n_outer, int64_t n_inner, Rng& rng,
    int64_t max_attempts = kDefaultRejectionBudget);

struct MassEstimate {
  double value = 0.0;
  double std_error = 0.0;
  bool exact = false;
};

// Exact when the oracle knows the region's shape, else Monte Carlo with
// n_mc draws.
MassEstimate LocalMass(const Region& region, const DistributionOracle& dist,
                       Rng& rng, int64_t n_mc = 100'000);

// Minimum local mass over n_outer sampled anchors: an upper estimate of the
// infimum over the support.
double Locality(const Explainer& e, const Classifier& f,
                const DistributionOracle& dist, int64_t n_outer, Rng& rng,
                int64_t n_mc = 100'000);

}  // namespace locaudit

#endif  // LOCAUDIT_CORE_MEASURES_H_

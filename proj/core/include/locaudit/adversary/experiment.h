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

// Drivers for the hard-instance experiments: auditor failure rates, world
// separation of the exact losses, and collision frequency of sample points.

#ifndef LOCAUDIT_ADVERSARY_EXPERIMENT_H_
#define LOCAUDIT_ADVERSARY_EXPERIMENT_H_

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "locaudit/adversary/f_star.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/adversary/partition.h"
#include "locaudit/auditor/audit_types.h"
#include "locaudit/auditor/auditor.h"
#include "locaudit/distributions/product_distribution.h"

namespace locaudit {

inline constexpr double kDefaultChooseKDelta = 0.01;

// Everything fixed before any f* is drawn.
struct HardInstance {
  AuditorConfig cfg;
  double lambda = 0.0;
  double delta_c = kDefaultChooseKDelta;
  std::shared_ptr<const PartitionSpec> partition;
  std::shared_ptr<const MomentMatchedProbs> probs;
  int64_t lower_bound_n = 0;
  // gamma lies in [1/48, 1/3): accepted, outside the proven range of the
  // root construction.
  bool gamma_warning = false;

  nlohmann::json Summary() const;
};

// Checks the gates, builds the partition with alpha = lambda and the
// probability system. K <= 0 means choose_K with `delta_c`.
absl::StatusOr<HardInstance> BuildHardInstance(const ProductDistribution& dist,
                                               const AuditorConfig& cfg,
                                               double lambda, int64_t K = 0,
                                               double delta_c =
                                                   kDefaultChooseKDelta);

// Samples n points from the partition's distribution, labelled by f and
// explained by the honest explainer.
AuditInput SampleHardInput(const FStarInstance& f, int64_t n, Rng& rng);

// Per trial: draw f*, draw X of size n, run the auditor, and compare with
// the exact interval of that f*. Trial t uses DeriveSeed(seed, t).
FailureRateReport RunLowerBoundExperiment(const HardInstance& hard,
                                          const Auditor& auditor, int64_t n,
                                          int64_t trials, uint64_t seed,
                                          int workers);

struct SeparationTrial {
  int world = 1;
  double loss_high_alpha = 0.0;  // L_{gamma (1 + eps1)}
  double loss_low_alpha = 0.0;   // L_{gamma (1 - eps1)}
  double max_deviation = 0.0;    // max_i |L_i - r_i|
  bool event = false;
};

struct WorldSeparationReport {
  int64_t trials_per_world = 0;
  int64_t hits_world1 = 0;  // T1 under P = 1
  int64_t hits_world0 = 0;  // T0 under P = 0
  double freq_world1 = 0.0;
  double freq_world0 = 0.0;
  // Fraction of draws with every |L_i - r_i| within the choose_K slack.
  double slack_ok_frequency = 0.0;
  std::vector<SeparationTrial> per_trial;  // world 1 trials, then world 0

  nlohmann::json ToJson() const;
};

// T1: 1/2 - eps2 < L_{g(1+e1)} <= L_{g(1-e1)} < 1/2 + eps2.
bool SeparationEventWorld1(double high_alpha_loss, double low_alpha_loss,
                           double eps2);
// T0: the same window shifted up by 4 eps2.
bool SeparationEventWorld0(double high_alpha_loss, double low_alpha_loss,
                           double eps2);

WorldSeparationReport RunWorldSeparation(const HardInstance& hard,
                                         int64_t trials_per_world,
                                         uint64_t seed, int workers);

struct CollisionReport {
  int64_t n = 0;
  int64_t threshold = 0;  // 2m
  int64_t trials = 0;
  int64_t hits = 0;       // trials where some cell got >= threshold points
  double frequency = 0.0;
  int64_t max_count = 0;  // largest per-cell count seen in any trial

  nlohmann::json ToJson() const;
};

CollisionReport RunRareCollision(const HardInstance& hard, int64_t n,
                                 int64_t trials, uint64_t seed, int workers);

}  // namespace locaudit

#endif  // LOCAUDIT_ADVERSARY_EXPERIMENT_H_

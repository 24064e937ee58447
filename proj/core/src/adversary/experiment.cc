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

#include "locaudit/adversary/experiment.h"

#include <algorithm>
#include <cmath>

#include "locaudit/auditor/bounds.h"
#include "locaudit/core/parallel.h"

namespace locaudit {

nlohmann::json HardInstance::Summary() const {
  nlohmann::json j;
  j["gamma"] = cfg.gamma;
  j["eps1"] = cfg.eps1;
  j["eps2"] = cfg.eps2;
  j["delta"] = cfg.delta;
  j["lambda"] = lambda;
  j["delta_c"] = delta_c;
  j["K"] = partition->K();
  j["cells"] = partition->cell_count();
  j["depth"] = partition->depth();
  j["l"] = probs->l;
  j["m"] = probs->m;
  j["eps"] = probs->eps;
  j["lower_bound_n"] = lower_bound_n;
  j["gamma_warning"] = gamma_warning;
  return j;
}

absl::StatusOr<HardInstance> BuildHardInstance(const ProductDistribution& dist,
                                               const AuditorConfig& cfg,
                                               double lambda, int64_t K,
                                               double delta_c) {
  if (absl::Status s = CheckLowerBoundGates(cfg, lambda); !s.ok()) return s;
  absl::StatusOr<MomentMatchedProbs> probs =
      BuildMomentMatchedProbs(cfg.gamma, cfg.eps1, cfg.eps2);
  if (!probs.ok()) return probs.status();
  absl::StatusOr<PartitionSpec> coarse = PartitionSpec::Build(dist, lambda, 1);
  if (!coarse.ok()) return coarse.status();
  if (K <= 0) {
    absl::StatusOr<int64_t> chosen = ChooseK(cfg.gamma, cfg.eps1, cfg.eps2,
                                             delta_c, coarse->cell_count());
    if (!chosen.ok()) return chosen.status();
    K = *chosen;
  }
  HardInstance h;
  h.cfg = cfg;
  h.lambda = lambda;
  h.delta_c = delta_c;
  h.partition = std::make_shared<const PartitionSpec>(coarse->WithK(K));
  h.probs = std::make_shared<const MomentMatchedProbs>(*std::move(probs));
  h.lower_bound_n = *LowerBoundSamples(cfg, lambda);
  h.gamma_warning = GammaNeedsWarning(cfg.gamma);
  return h;
}

AuditInput SampleHardInput(const FStarInstance& f, int64_t n, Rng& rng) {
  const FStarClassifier classifier(f);
  const HonestExplainer explainer(f.partition_ptr());
  return SampleAuditInput(f.partition().dist(), classifier, explainer, n, rng);
}

FailureRateReport RunLowerBoundExperiment(const HardInstance& hard,
                                          const Auditor& auditor, int64_t n,
                                          int64_t trials, uint64_t seed,
                                          int workers) {
  std::vector<TrialRecord> records(trials);
  ParallelFor(trials, workers, [&](int64_t t) {
    TrialRecord& rec = records[t];
    rec.trial = t;
    rec.seed = DeriveSeed(seed, t);
    Rng rng(rec.seed);
    const FStarInstance f = SampleFStar(hard.partition, hard.probs, rng);
    rec.world = f.world();
    const LossProfile profile = f.ExactLossProfile();
    rec.interval = AccuracyInterval(profile, hard.cfg);
    const ExactLossOracle exact = [&profile](double alpha) {
      return profile.LossAtLeast(alpha);
    };
    const AuditInput input = SampleHardInput(f, n, rng);
    absl::StatusOr<double> est = auditor.Estimate(input, {&exact}, rng);
    if (est.ok()) {
      rec.estimate = *est;
      rec.failed = !InInterval(*est, rec.interval);
    } else {
      rec.error = std::string(est.status().message());
      rec.failed = true;
    }
  });
  return Summarize(auditor.name(), n, std::move(records));
}

bool SeparationEventWorld1(double high_alpha_loss, double low_alpha_loss,
                           double eps2) {
  return 0.5 - eps2 < high_alpha_loss && high_alpha_loss <= low_alpha_loss &&
         low_alpha_loss < 0.5 + eps2;
}

bool SeparationEventWorld0(double high_alpha_loss, double low_alpha_loss,
                           double eps2) {
  return 0.5 + 3.0 * eps2 < high_alpha_loss &&
         high_alpha_loss <= low_alpha_loss &&
         low_alpha_loss < 0.5 + 5.0 * eps2;
}

nlohmann::json WorldSeparationReport::ToJson() const {
  nlohmann::json j;
  j["trials_per_world"] = trials_per_world;
  j["hits_world1"] = hits_world1;
  j["hits_world0"] = hits_world0;
  j["freq_world1"] = freq_world1;
  j["freq_world0"] = freq_world0;
  j["slack_ok_frequency"] = slack_ok_frequency;
  nlohmann::json rows = nlohmann::json::array();
  for (const SeparationTrial& t : per_trial) {
    rows.push_back({{"world", t.world},
                    {"loss_high_alpha", t.loss_high_alpha},
                    {"loss_low_alpha", t.loss_low_alpha},
                    {"max_deviation", t.max_deviation},
                    {"event", t.event}});
  }
  j["per_trial"] = std::move(rows);
  return j;
}

WorldSeparationReport RunWorldSeparation(const HardInstance& hard,
                                         int64_t trials_per_world,
                                         uint64_t seed, int workers) {
  const AuditorConfig& cfg = hard.cfg;
  const double slack = 0.01 * cfg.gamma * std::min(cfg.eps1, cfg.eps2);
  std::vector<SeparationTrial> rows(2 * trials_per_world);
  ParallelFor(2 * trials_per_world, workers, [&](int64_t t) {
    const int world = t < trials_per_world ? 1 : 0;
    Rng rng(DeriveSeed(seed, t));
    const FStarInstance f =
        SampleFStarInWorld(hard.partition, hard.probs, world, rng);
    SeparationTrial& row = rows[t];
    row.world = world;
    row.loss_high_alpha = f.ExactLossAtLeast(cfg.gamma * (1.0 + cfg.eps1));
    row.loss_low_alpha = f.ExactLossAtLeast(cfg.gamma * (1.0 - cfg.eps1));
    for (int64_t i = 0; i < f.partition().cell_count(); ++i) {
      row.max_deviation = std::max(
          row.max_deviation, std::fabs(f.CellLoss(i) - f.CellProbability(i)));
    }
    row.event = world == 1 ? SeparationEventWorld1(row.loss_high_alpha,
                                                   row.loss_low_alpha,
                                                   cfg.eps2)
                           : SeparationEventWorld0(row.loss_high_alpha,
                                                   row.loss_low_alpha,
                                                   cfg.eps2);
  });
  WorldSeparationReport r;
  r.trials_per_world = trials_per_world;
  int64_t slack_ok = 0;
  for (const SeparationTrial& row : rows) {
    if (row.event) ++(row.world == 1 ? r.hits_world1 : r.hits_world0);
    if (row.max_deviation <= slack) ++slack_ok;
  }
  if (trials_per_world > 0) {
    const double t = static_cast<double>(trials_per_world);
    r.freq_world1 = r.hits_world1 / t;
    r.freq_world0 = r.hits_world0 / t;
    r.slack_ok_frequency = slack_ok / (2.0 * t);
  }
  r.per_trial = std::move(rows);
  return r;
}

nlohmann::json CollisionReport::ToJson() const {
  return {{"n", n},           {"threshold", threshold},
          {"trials", trials}, {"hits", hits},
          {"frequency", frequency}, {"max_count", max_count}};
}

CollisionReport RunRareCollision(const HardInstance& hard, int64_t n,
                                 int64_t trials, uint64_t seed, int workers) {
  const PartitionSpec& partition = *hard.partition;
  const int64_t threshold = 2 * hard.probs->m;
  std::vector<int64_t> max_counts(trials, 0);
  ParallelFor(trials, workers, [&](int64_t t) {
    Rng rng(DeriveSeed(seed, t));
    std::vector<int64_t> cells;
    cells.reserve(n);
    for (int64_t i = 0; i < n; ++i) {
      const int64_t c = partition.Locate(partition.dist().Sample(rng));
      if (c >= 0) cells.push_back(c);
    }
    std::sort(cells.begin(), cells.end());
    int64_t best = 0;
    for (size_t i = 0; i < cells.size();) {
      size_t j = i;
      while (j < cells.size() && cells[j] == cells[i]) ++j;
      best = std::max<int64_t>(best, j - i);
      i = j;
    }
    max_counts[t] = best;
  });
  CollisionReport r;
  r.n = n;
  r.threshold = threshold;
  r.trials = trials;
  for (int64_t c : max_counts) {
    if (c >= threshold) ++r.hits;
    r.max_count = std::max(r.max_count, c);
  }
  r.frequency = trials == 0 ? 0.0 : static_cast<double>(r.hits) / trials;
  return r;
}

}  // namespace locaudit

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

// One PASS/FAIL line per acceptance criterion. `--ac N` runs a single one.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/strings/str_format.h"
#include "locaudit/adversary/experiment.h"
#include "locaudit/adversary/f_star.h"
#include "locaudit/adversary/likelihood.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/auditor/auditor.h"
#include "locaudit/auditor/bounds.h"
#include "locaudit/core/parallel.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/product_distribution.h"
#include "locaudit/harness/config.h"
#include "locaudit/harness/runner.h"
#include "locaudit/spheres/instance.h"
#include "locaudit/spheres/psi.h"
#include "locaudit/spheres/scan.h"

namespace locaudit {
namespace {

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kPowerSumRelTol = 1e-9;
constexpr double kNondegenerateMin = 1e-3;
constexpr double kClosedFormTol = 1e-12;
constexpr double kLikelihoodTol = 1e-9;
constexpr double kSeparationMin = 0.9;
constexpr double kCollisionSlack = 0.02;
constexpr double kUpperSlack = 0.05;
constexpr double kLowerSlack = 0.1;
constexpr double kPsiClosedFormTol = 1e-10;
constexpr double kScanSlack = 0.02;
constexpr double kCoverageSlack = 0.01;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

int Workers() { return DefaultWorkers(1); }

// Hard instance shared by the lower-bound criteria: uniform [0,1]^2.
AuditorConfig HardConfig() {
  AuditorConfig cfg;
  cfg.gamma = 0.02;
  cfg.eps1 = 0.015;
  cfg.eps2 = 1.0 / 64.0;
  cfg.delta = 0.1;
  return cfg;
}
constexpr double kHardLambda = 2e-5;

const HardInstance& Hard() {
  static const HardInstance* hard = [] {
    auto h = BuildHardInstance(ProductDistribution::UniformCube(2),
                               HardConfig(), kHardLambda);
    if (!h.ok()) {
      std::cerr << "hard instance: " << h.status() << "\n";
      std::exit(1);
    }
    return new HardInstance(*std::move(h));
  }();
  return *hard;
}

// Four equal slabs of [0,1], f = -1 on the first two.
AuditorConfig UpperConfig() {
  AuditorConfig cfg;
  cfg.eps1 = 0.2;
  cfg.eps2 = 0.1;
  cfg.gamma = 0.3;
  cfg.delta = 0.1;
  return cfg;
}
constexpr double kUpperLambda = 0.25;

Outcome MomentGrid() {
  int satisfied = 0, nondegenerate = 0;
  double worst_below = 0.0, smallest_at_2m = 1.0;
  const auto grid = DefaultMomentGrid();
  for (const auto& t : grid) {
    auto p = BuildMomentMatchedProbs(t[0], t[1], t[2]);
    if (!p.ok()) continue;
    for (int s = 0; s < 2 * p->m; ++s) {
      worst_below = std::max(worst_below, p->RelativeResidual(s));
    }
    const double at_2m = p->RelativeResidual(2 * p->m);
    smallest_at_2m = std::min(smallest_at_2m, at_2m);
    if (p->CheckPowerSums(kPowerSumRelTol).ok() &&
        p->CheckSeparation().ok() && p->CheckDoubleRoot().ok() &&
        p->CheckOrderRange().ok() && p->CheckRange().ok()) {
      ++satisfied;
    }
    if (at_2m > kNondegenerateMin) ++nondegenerate;
  }
  const int n = static_cast<int>(grid.size());
  return {n == 20 && satisfied == n && nondegenerate == n,
          absl::StrFormat("triples=%d conditions_1_4=%d/%d max_residual_below_2m="
                          "%.3g residual_at_2m>%g: %d/%d (smallest %.3g)",
                          n, satisfied, n, worst_below, kNondegenerateMin,
                          nondegenerate, n, smallest_at_2m)};
}

Outcome ClosedFormL1() {
  auto q = QOffsets(1);
  if (!q.ok()) return {false, std::string(q.status().message())};
  const double r = std::sqrt(10.0);
  const double want[] = {-r, 0.0, 0.0, r};
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs((*q)[i] - want[i]));
  const std::vector<double> p = POffsets(1);
  bool sums = true;
  const long double expect[] = {4, 0, 20, 0};
  for (int t = 0; t < 4; ++t) {
    sums &= PowerSum(p, t) == expect[t];
    sums &= std::abs(static_cast<double>(PowerSum(*q, t) - expect[t])) <
            kClosedFormTol * 20;
  }
  const double p4 = static_cast<double>(PowerSum(p, 4));
  const double q4 = static_cast<double>(PowerSum(*q, 4));
  const bool diverge = p4 == 164.0 && std::abs(q4 - 200.0) < 1e-9;
  return {worst <= kClosedFormTol && sums && diverge,
          absl::StrFormat("max_root_error=%.3g sums_match=%d t4: %.12g vs %.12g",
                          worst, sums, p4, q4)};
}

Outcome ZeroInformation() {
  const HardInstance& hard = Hard();
  const int64_t sizes[] = {hard.lower_bound_n, 1000, 4000};
  Rng rng(DeriveSeed(3, 0));
  int accepted = 0, skipped = 0, bad = 0;
  double worst = 0.0;
  while (accepted < 1000) {
    const FStarInstance f = SampleFStar(hard.partition, hard.probs, rng);
    const AuditInput in = SampleHardInput(f, sizes[accepted % 3], rng);
    auto counts = CountByCell(*hard.partition, in.points, in.labels);
    if (!counts.ok()) return {false, std::string(counts.status().message())};
    if (MaxDistinctPerCell(*counts) >= 2 * hard.probs->m) {
      ++skipped;
      continue;
    }
    const double dev =
        std::abs(LikelihoodRatioFromCounts(*hard.probs, *counts) - 1.0);
    worst = std::max(worst, dev);
    bad += dev > kLikelihoodTol;
    ++accepted;
  }
  return {bad == 0, absl::StrFormat("pairs=%d outside_regime_skipped=%d "
                                    "max|LR-1|=%.3g violations=%d",
                                    accepted, skipped, worst, bad)};
}

Outcome WorldSeparation() {
  const WorldSeparationReport r = RunWorldSeparation(Hard(), 200, 13, Workers());
  return {r.freq_world1 >= kSeparationMin && r.freq_world0 >= kSeparationMin,
          absl::StrFormat("K=%d freq_T1|P=1=%.3f freq_T0|P=0=%.3f min=%.2f",
                          Hard().partition->K(), r.freq_world1, r.freq_world0,
                          kSeparationMin)};
}

Outcome RareCollision() {
  const HardInstance& hard = Hard();
  const CollisionReport r =
      RunRareCollision(hard, hard.lower_bound_n, 2000, 11, Workers());
  const double limit = 1.0 / 180.0 + kCollisionSlack;
  return {r.frequency <= limit,
          absl::StrFormat("n=%d threshold=%d frequency=%.4f max_count=%d "
                          "limit=%.4f",
                          r.n, r.threshold, r.frequency, r.max_count, limit)};
}

Outcome UpperBound() {
  const AuditorConfig cfg = UpperConfig();
  auto inst = BuildSlabInstance(ProductDistribution::UniformCube(1), 4, 2);
  if (!inst.ok()) return {false, std::string(inst.status().message())};
  auto n = UpperBoundSamples(cfg, kUpperLambda);
  if (!n.ok()) return {false, std::string(n.status().message())};
  const LossProfile& profile = inst->profile;
  const ExactLossOracle exact = [&profile](double a) {
    return profile.LossAtLeast(a);
  };
  const SimpleAuditAuditor auditor(cfg);
  const FailureRateReport r =
      RunAuditTrials(inst->dist, *inst->f, *inst->explainer, exact, cfg,
                     auditor, *n, 200, 7, Workers());
  const double success = 1.0 - r.failure_rate;
  const double target = 1.0 - cfg.delta - kUpperSlack;
  return {success >= target,
          absl::StrFormat("n=%d L_gamma=%.3f success=%.3f target=%.3f "
                          "errors=%d",
                          *n, profile.LossAtLeast(cfg.gamma), success, target,
                          r.errors)};
}

Outcome LowerBoundFailure() {
  const HardInstance& hard = Hard();
  const int64_t n = hard.lower_bound_n;
  const double target = 1.0 / 3.0 - kLowerSlack;
  bool pass = true;
  std::string detail = absl::StrFormat("n=%d target=%.3f", n, target);
  for (const char* name : {"simple_audit", "constant"}) {
    auto auditor = MakeAuditor(name, hard.cfg, n);
    if (!auditor.ok()) return {false, std::string(auditor.status().message())};
    const FailureRateReport r =
        RunLowerBoundExperiment(hard, **auditor, n, 200, 11, Workers());
    pass &= r.failure_rate >= target;
    absl::StrAppendFormat(&detail, " %s=%.3f(errors %d)", (*auditor)->name(),
                          r.failure_rate, r.errors);
  }
  return {pass, detail};
}

Outcome PsiInequalities() {
  int points = 0, violations = 0;
  for (int d = 3; d <= 20; ++d) {
    for (int ci = 1; ci <= 9; ++ci) {
      const double c = 0.1 * ci;
      std::vector<double> thetas;
      for (double t = 0.1; t < kPi; t += 0.1) thetas.push_back(t);
      thetas.push_back(kPi);
      for (double t : thetas) {
        const double ratio = Psi(c * t, d) / Psi(t, d);
        ++points;
        if (ratio < std::pow(c, d - 1) * (1 - 1e-12)) ++violations;
        if (t <= kPi / 2 &&
            ratio > c * std::pow(std::sin(c * t) / std::sin(t), d - 2) *
                        (1 + 1e-12)) {
          ++violations;
        }
      }
    }
  }
  double worst = 0.0;
  for (double t = 0.0; t <= kPi; t += kPi / 1000) {
    worst = std::max(worst, std::abs(Psi(t, 3) - (1 - std::cos(t)) / 2));
  }
  return {violations == 0 && worst <= kPsiClosedFormTol,
          absl::StrFormat("grid_points=%d violations=%d d3_max_error=%.3g",
                          points, violations, worst)};
}

Outcome SpheresScan() {
  bool pass = true;
  std::string detail;
  for (int d : {5, 8, 10}) {
    auto inst = SpheresInstance::Create(d);
    if (!inst.ok()) return {false, std::string(inst.status().message())};
    ScanOptions opt;
    opt.balls = 50;
    opt.slack = kScanSlack;
    opt.seed = DeriveSeed(17, d);
    opt.workers = Workers();
    auto r = ScanSpheres(*inst, opt);
    if (!r.ok()) return {false, std::string(r.status().message())};
    int passed = 0;
    for (const ScanRow& row : r->rows) passed += row.pass;
    const bool ok = r->AllPass() && r->HasSmallExactBall() &&
                    r->AllSpaceLoss() >= 1.0 / 3.0 - kScanSlack;
    pass &= ok;
    absl::StrAppendFormat(&detail, "%sd=%d %d/%d small_exact=%d all_space=%.4f",
                          detail.empty() ? "" : " ", d, passed,
                          static_cast<int>(r->rows.size()),
                          r->HasSmallExactBall(), r->AllSpaceLoss());
  }
  return {pass, detail};
}

Outcome Coverage() {
  const AuditorConfig cfg = UpperConfig();
  auto inst = BuildSlabInstance(ProductDistribution::UniformCube(1), 4, 2);
  if (!inst.ok()) return {false, std::string(inst.status().message())};
  const int64_t k = SimpleAuditK(cfg);
  const int64_t n_prime =
      static_cast<int64_t>(std::ceil(CoverageSamples(k, cfg, kUpperLambda)));
  const CoverageReport r = RunCoverageTrials(
      inst->dist, *inst->f, *inst->explainer, k, n_prime, 2000, 23, Workers());
  const double target = CoverageTarget(cfg) - kCoverageSlack;
  return {r.frequency >= target,
          absl::StrFormat("k=%d n'=%d frequency=%.4f target=%.4f", k, n_prime,
                          r.frequency, target)};
}

std::vector<Criterion> Criteria() {
  return {
      {1, "moment_matching_grid", 10, MomentGrid},
      {2, "closed_form_l1", 1, ClosedFormL1},
      {3, "zero_information", 30, ZeroInformation},
      {4, "world_separation", 300, WorldSeparation},
      {5, "rare_collision", 300, RareCollision},
      {6, "upper_bound", 600, UpperBound},
      {7, "lower_bound_failure", 900, LowerBoundFailure},
      {8, "psi_inequalities", 10, PsiInequalities},
      {9, "spheres_scan", 1200, SpheresScan},
      {10, "coverage", 120, Coverage},
  };
}

}  // namespace
}  // namespace locaudit

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  app.add_option("--ac", only, "Run one criterion (1-10)")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const locaudit::Criterion& c : locaudit::Criteria()) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    locaudit::Outcome out = c.run();
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool in_budget = secs < c.budget_seconds;
    const bool pass = out.pass && in_budget;
    all_pass &= pass;
    std::cout << absl::StrFormat("AC%d %s %s: %s (%.2fs, budget %.0fs%s)\n",
                                 c.id, pass ? "PASS" : "FAIL", c.name,
                                 out.detail, secs, c.budget_seconds,
                                 in_budget ? "" : ", over budget");
    std::cout.flush();
  }
  return all_pass ? 0 : 1;
}

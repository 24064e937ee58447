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

#include "locaudit/harness/runner.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>

#include "absl/strings/match.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "locaudit/adversary/experiment.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/auditor/bounds.h"
#include "locaudit/core/errors.h"
#include "locaudit/core/parallel.h"
#include "locaudit/spheres/instance.h"
#include "locaudit/spheres/psi.h"
#include "locaudit/spheres/scan.h"

namespace locaudit {
namespace {

using nlohmann::json;

struct Context {
  const ExperimentConfig& cfg;
  uint64_t seed;
  int workers;
  json echo;
};

std::vector<std::string> TrialHeader(bool with_world) {
  std::vector<std::string> h = {"auditor", "trial", "seed"};
  if (with_world) h.push_back("world");
  for (const char* c : {"estimate", "interval_lo", "interval_hi", "failed",
                        "error"}) {
    h.push_back(c);
  }
  return h;
}

// Commas and newlines would break the CSV; errors are free text.
std::string CsvText(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

void AppendTrials(const FailureRateReport& r, bool with_world, json& per_trial,
                  CsvTable& table) {
  for (const TrialRecord& t : r.per_trial) {
    json j = TrialToJson(t);
    j["auditor"] = r.auditor;
    per_trial.push_back(std::move(j));
    std::vector<std::string> row = {r.auditor, std::to_string(t.trial),
                                    std::to_string(t.seed)};
    if (with_world) row.push_back(std::to_string(t.world));
    row.push_back(t.estimate ? CsvNumber(*t.estimate) : "");
    row.push_back(CsvNumber(t.interval.first));
    row.push_back(CsvNumber(t.interval.second));
    row.push_back(t.failed ? "1" : "0");
    row.push_back(CsvText(t.error));
    table.rows.push_back(std::move(row));
  }
}

json RateSummary(const FailureRateReport& r) {
  return {{"auditor", r.auditor},
          {"n", r.n},
          {"trials", r.trials},
          {"failures", r.failures},
          {"errors", r.errors},
          {"failure_rate", r.failure_rate},
          {"success_rate", r.trials == 0 ? 0.0 : 1.0 - r.failure_rate}};
}

absl::Status RunAuditUpper(Context& ctx, ExperimentRecord& rec, bool& pass) {
  const ExperimentConfig& c = ctx.cfg;
  absl::StatusOr<ProductDistribution> dist =
      MakeProductDistribution(c.distribution);
  if (!dist.ok()) return dist.status();
  absl::StatusOr<SlabInstance> inst =
      BuildSlabInstance(*dist, c.cells, c.negative_cells);
  if (!inst.ok()) return inst.status();
  int64_t n = 0;
  if (c.n) {
    n = *c.n;
  } else {
    absl::StatusOr<int64_t> auto_n = UpperBoundSamples(c.auditor, c.lambda);
    if (!auto_n.ok()) return auto_n.status();
    n = *auto_n;
  }
  ctx.echo["n"] = n;
  const LossProfile& profile = inst->profile;
  const ExactLossOracle exact = [&profile](double a) {
    return profile.LossAtLeast(a);
  };
  const std::pair<double, double> interval =
      AccuracyInterval(profile, c.auditor);

  json agg;
  agg["n"] = n;
  agg["m"] = SimpleAuditM(c.auditor);
  agg["k"] = SimpleAuditK(c.auditor);
  agg["loss_at_gamma"] = profile.LossAtLeast(c.auditor.gamma);
  agg["interval"] = {interval.first, interval.second};
  agg["success_target"] = 1.0 - c.auditor.delta - c.tolerance;
  json rates = json::array();
  CsvTable trials{TrialHeader(false), {}};
  pass = true;
  for (const std::string& name : c.auditors) {
    absl::StatusOr<std::unique_ptr<Auditor>> auditor =
        MakeAuditor(name, c.auditor, n);
    if (!auditor.ok()) return auditor.status();
    const FailureRateReport r =
        RunAuditTrials(*dist, *inst->f, *inst->explainer, exact, c.auditor,
                       **auditor, n, c.trials, ctx.seed, ctx.workers);
    rates.push_back(RateSummary(r));
    AppendTrials(r, false, rec.per_trial, trials);
    if (name == "simple_audit" &&
        1.0 - r.failure_rate < 1.0 - c.auditor.delta - c.tolerance) {
      pass = false;
    }
  }
  agg["auditors"] = std::move(rates);
  rec.tables["trials"] = std::move(trials);

  if (c.coverage_trials > 0) {
    const int64_t k = SimpleAuditK(c.auditor);
    const int64_t n_prime = static_cast<int64_t>(
        std::ceil(CoverageSamples(k, c.auditor, c.lambda)));
    const CoverageReport cov = RunCoverageTrials(
        *dist, *inst->f, *inst->explainer, k, n_prime, c.coverage_trials,
        DeriveSeed(ctx.seed, 0x636f76), ctx.workers);
    const double target = CoverageTarget(c.auditor) - 0.01;
    agg["coverage"] = {{"k", cov.k},
                       {"n_prime", cov.n_prime},
                       {"trials", cov.trials},
                       {"covered", cov.covered},
                       {"frequency", cov.frequency},
                       {"min_region_mass", cov.min_region_mass},
                       {"target", target}};
    if (cov.frequency < target) pass = false;
  }
  rec.aggregate = std::move(agg);
  return absl::OkStatus();
}

absl::StatusOr<HardInstance> Hard(Context& ctx) {
  const ExperimentConfig& c = ctx.cfg;
  absl::StatusOr<ProductDistribution> dist =
      MakeProductDistribution(c.distribution);
  if (!dist.ok()) return dist.status();
  absl::StatusOr<HardInstance> hard =
      BuildHardInstance(*dist, c.auditor, c.lambda, c.K.value_or(0), c.delta_c);
  if (!hard.ok()) return hard.status();
  ctx.echo["K"] = hard->partition->K();
  return hard;
}

absl::Status RunAuditLower(Context& ctx, ExperimentRecord& rec, bool& pass) {
  const ExperimentConfig& c = ctx.cfg;
  absl::StatusOr<HardInstance> hard = Hard(ctx);
  if (!hard.ok()) return hard.status();
  const int64_t n = c.n.value_or(hard->lower_bound_n);
  ctx.echo["n"] = n;
  json agg;
  agg["instance"] = hard->Summary();
  agg["n"] = n;
  agg["failure_target"] = 1.0 / 3.0 - c.tolerance;
  json rates = json::array();
  CsvTable trials{TrialHeader(true), {}};
  pass = true;
  for (const std::string& name : c.auditors) {
    absl::StatusOr<std::unique_ptr<Auditor>> auditor =
        MakeAuditor(name, c.auditor, n);
    if (!auditor.ok()) return auditor.status();
    const FailureRateReport r = RunLowerBoundExperiment(
        *hard, **auditor, n, c.trials, ctx.seed, ctx.workers);
    rates.push_back(RateSummary(r));
    AppendTrials(r, true, rec.per_trial, trials);
    // The oracle sees the exact loss; it is the control, not a subject.
    if (name != "oracle" && r.failure_rate < 1.0 / 3.0 - c.tolerance) {
      pass = false;
    }
  }
  agg["auditors"] = std::move(rates);
  rec.tables["trials"] = std::move(trials);
  if (c.collision_trials > 0) {
    const CollisionReport col =
        RunRareCollision(*hard, n, c.collision_trials,
                         DeriveSeed(ctx.seed, 0x636f6c), ctx.workers);
    json j = col.ToJson();
    j["target"] = 1.0 / 180.0 + 0.02;
    agg["collision"] = std::move(j);
    if (col.frequency > 1.0 / 180.0 + 0.02) pass = false;
  }
  rec.aggregate = std::move(agg);
  return absl::OkStatus();
}

absl::Status RunWorldSep(Context& ctx, ExperimentRecord& rec, bool& pass) {
  const ExperimentConfig& c = ctx.cfg;
  absl::StatusOr<HardInstance> hard = Hard(ctx);
  if (!hard.ok()) return hard.status();
  const WorldSeparationReport r =
      RunWorldSeparation(*hard, c.trials, ctx.seed, ctx.workers);
  json full = r.ToJson();
  rec.per_trial = full["per_trial"];
  full.erase("per_trial");
  full["instance"] = hard->Summary();
  full["min_frequency"] = c.tolerance;
  rec.aggregate = std::move(full);
  CsvTable table{{"world", "trial", "loss_high_alpha", "loss_low_alpha",
                  "max_deviation", "event"},
                 {}};
  for (size_t i = 0; i < r.per_trial.size(); ++i) {
    const SeparationTrial& t = r.per_trial[i];
    table.rows.push_back({std::to_string(t.world), std::to_string(i),
                          CsvNumber(t.loss_high_alpha),
                          CsvNumber(t.loss_low_alpha),
                          CsvNumber(t.max_deviation), t.event ? "1" : "0"});
  }
  rec.tables["separation"] = std::move(table);
  pass = r.freq_world1 >= c.tolerance && r.freq_world0 >= c.tolerance;
  return absl::OkStatus();
}

absl::Status RunMomentCheck(Context& ctx, ExperimentRecord& rec, bool& pass) {
  CsvTable summary{{"gamma", "eps1", "eps2", "l", "m", "eps", "power_sums",
                    "separation", "double_root", "order_range", "range",
                    "max_residual_below_2m", "residual_at_2m",
                    "nondegenerate_1e-3", "error"},
                   {}};
  CsvTable residuals{{"gamma", "eps1", "eps2", "t", "relative_residual"}, {}};
  pass = true;
  int64_t ok_count = 0;
  int64_t nondegenerate_count = 0;
  double worst_residual = 0.0;
  for (const auto& t : ctx.cfg.grid) {
    json row = {{"gamma", t[0]}, {"eps1", t[1]}, {"eps2", t[2]}};
    std::vector<std::string> cells = {CsvNumber(t[0]), CsvNumber(t[1]),
                                      CsvNumber(t[2])};
    absl::StatusOr<MomentMatchedProbs> probs =
        BuildMomentMatchedProbs(t[0], t[1], t[2]);
    if (!probs.ok()) {
      pass = false;
      row["error"] = std::string(probs.status().message());
      for (int i = 0; i < 11; ++i) cells.push_back("");
      cells.push_back(CsvText(std::string(probs.status().message())));
      summary.rows.push_back(std::move(cells));
      rec.per_trial.push_back(std::move(row));
      continue;
    }
    const MomentMatchedProbs& p = *probs;
    const bool c1 = p.CheckPowerSums(1e-9).ok();
    const bool c2 = p.CheckSeparation().ok();
    const bool c3 = p.CheckDoubleRoot().ok();
    const bool c4 = p.CheckOrderRange().ok();
    const bool range = p.CheckRange().ok();
    double max_below = 0.0;
    for (int s = 0; s <= 2 * p.m; ++s) {
      const double res = p.RelativeResidual(s);
      if (s < 2 * p.m) max_below = std::max(max_below, res);
      residuals.rows.push_back({CsvNumber(t[0]), CsvNumber(t[1]),
                                CsvNumber(t[2]), std::to_string(s),
                                CsvNumber(res)});
    }
    const double at_2m = p.RelativeResidual(2 * p.m);
    const bool nondegenerate = at_2m > 1e-3;
    const bool ok = c1 && c2 && c3 && c4 && range && at_2m > 0.0;
    if (ok) ++ok_count;
    if (nondegenerate) ++nondegenerate_count;
    worst_residual = std::max(worst_residual, max_below);
    pass = pass && ok;
    row.update({{"l", p.l}, {"m", p.m}, {"eps", p.eps}, {"power_sums", c1},
                {"separation", c2}, {"double_root", c3}, {"order_range", c4},
                {"range", range}, {"max_residual_below_2m", max_below},
                {"residual_at_2m", at_2m},
                {"nondegenerate_1e-3", nondegenerate}});
    for (const std::string& s :
         {std::to_string(p.l), std::to_string(p.m), CsvNumber(p.eps),
          std::string(c1 ? "1" : "0"), std::string(c2 ? "1" : "0"),
          std::string(c3 ? "1" : "0"), std::string(c4 ? "1" : "0"),
          std::string(range ? "1" : "0"), CsvNumber(max_below),
          CsvNumber(at_2m), std::string(nondegenerate ? "1" : "0"),
          std::string()}) {
      cells.push_back(s);
    }
    summary.rows.push_back(std::move(cells));
    rec.per_trial.push_back(std::move(row));
  }
  rec.aggregate = {{"triples", ctx.cfg.grid.size()},
                   {"conditions_ok", ok_count},
                   {"nondegenerate_1e-3", nondegenerate_count},
                   {"max_residual_below_2m", worst_residual}};
  rec.tables["moment_check"] = std::move(summary);
  rec.tables["residuals"] = std::move(residuals);
  return absl::OkStatus();
}

json ScanRowJson(const ScanRow& r) {
  return {{"d", r.d},
          {"kind", std::string(BallKindName(r.kind))},
          {"center_norm", r.center_norm},
          {"radius", r.radius},
          {"theta", r.theta},
          {"mass", r.mass},
          {"mass_threshold", r.mass_threshold},
          {"best_loss", r.best_loss},
          {"train_loss", r.train_loss},
          {"pass", r.pass}};
}

absl::Status RunSpheresScan(Context& ctx, ExperimentRecord& rec, bool& pass) {
  const ExperimentConfig& c = ctx.cfg;
  CsvTable table;
  for (absl::string_view h : absl::StrSplit(ScanCsvHeader(), ',')) {
    table.header.emplace_back(absl::StripSuffix(h, "\n"));
  }
  json per_d = json::array();
  pass = true;
  for (int d : c.dims) {
    absl::StatusOr<SpheresInstance> inst = SpheresInstance::Create(d);
    if (!inst.ok()) return inst.status();
    ScanOptions opt;
    opt.balls = c.balls;
    opt.slack = c.slack;
    opt.fit.n_points = c.fit_points;
    opt.seed = DeriveSeed(ctx.seed, d);
    opt.workers = ctx.workers;
    absl::StatusOr<ScanReport> r = ScanSpheres(*inst, opt);
    if (!r.ok()) return r.status();
    for (const ScanRow& row : r->rows) rec.per_trial.push_back(ScanRowJson(row));
    for (absl::string_view line :
         absl::StrSplit(ScanCsvRows(*r), '\n', absl::SkipEmpty())) {
      std::vector<std::string> cells = absl::StrSplit(line, ',');
      table.rows.push_back(std::move(cells));
    }
    const bool all_space_ok = r->AllSpaceLoss() >= 1.0 / 3.0 - c.slack;
    const bool ok = r->AllPass() && r->HasSmallExactBall() && all_space_ok;
    int failing = 0;
    for (const ScanRow& row : r->rows) failing += row.pass ? 0 : 1;
    per_d.push_back({{"d", d},
                     {"balls", r->rows.size()},
                     {"failing", failing},
                     {"mass_threshold", r->mass_threshold},
                     {"psi_pi_over_3", r->psi_pi_over_3},
                     {"all_space_loss", r->AllSpaceLoss()},
                     {"has_small_exact_ball", r->HasSmallExactBall()},
                     {"pass", ok}});
    pass = pass && ok;
  }
  rec.aggregate = {{"slack", c.slack}, {"dims", std::move(per_d)}};
  rec.tables["scan"] = std::move(table);
  return absl::OkStatus();
}

absl::Status RunLocalitySweep(Context& ctx, ExperimentRecord& rec, bool& pass) {
  const ExperimentConfig& c = ctx.cfg;
  std::vector<double> lambdas = c.lambdas;
  std::sort(lambdas.begin(), lambdas.end());
  CsvTable table{{"lambda", "lower_bound_n", "upper_bound_n"}, {}};
  pass = true;
  std::optional<int64_t> prev_lower;
  std::optional<double> prev_upper;
  for (double lambda : lambdas) {
    json row = {{"lambda", lambda}};
    std::optional<int64_t> lower;
    if (CheckLowerBoundGates(c.auditor, lambda).ok()) {
      absl::StatusOr<int64_t> v = LowerBoundSamples(c.auditor, lambda);
      if (v.ok()) lower = *v;
    }
    absl::StatusOr<double> upper = UpperBoundSamplesReal(c.auditor, lambda);
    if (!upper.ok()) return upper.status();
    row["lower_bound_n"] = lower ? json(*lower) : json(nullptr);
    row["upper_bound_n"] = *upper;
    if (lower && prev_lower && *lower > *prev_lower) pass = false;
    if (prev_upper && *upper > *prev_upper) pass = false;
    if (lower && static_cast<double>(*lower) > *upper) pass = false;
    if (lower) prev_lower = lower;
    prev_upper = *upper;
    table.rows.push_back({CsvNumber(lambda),
                          lower ? std::to_string(*lower) : std::string(),
                          CsvNumber(*upper)});
    rec.per_trial.push_back(std::move(row));
  }
  rec.aggregate = {{"points", lambdas.size()},
                   {"monotone_and_ordered", pass}};
  rec.tables["sweep"] = std::move(table);
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<SlabInstance> BuildSlabInstance(const ProductDistribution& dist,
                                               int cells, int negative_cells) {
  if (cells < 1 || negative_cells < 0 || negative_cells > cells) {
    return ParameterOutOfRangeError("need 0 <= negative_cells <= cells");
  }
  SlabInstance inst;
  inst.dist = dist;
  const HyperRectangle box = dist.SupportBox();
  // Cut k of `cells` sits at mass fraction k / cells of the box.
  std::vector<double> cuts = {box.lo(0)};
  for (int k = 1; k < cells; ++k) {
    cuts.push_back(dist.SplitPoint(box, 0, static_cast<double>(k) / cells));
  }
  cuts.push_back(box.hi(0));
  for (int k = 0; k < cells; ++k) {
    std::vector<double> lo = box.lo();
    std::vector<double> hi = box.hi();
    lo[0] = cuts[k];
    hi[0] = cuts[k + 1];
    absl::StatusOr<HyperRectangle> cell = HyperRectangle::Create(lo, hi);
    if (!cell.ok()) return cell.status();
    absl::StatusOr<double> mass = dist.Mass(*cell);
    if (!mass.ok()) return mass.status();
    inst.profile.Add(*mass, k < negative_cells ? 1.0 : 0.0);
    inst.cells.push_back(*std::move(cell));
  }
  inst.cut = negative_cells == 0 ? -INFINITY : cuts[negative_cells];
  const double cut = inst.cut;
  inst.f = std::make_unique<FunctionClassifier>([cut](const Point& x) {
    return x[0] <= cut ? Label::kNegative : Label::kPositive;
  });
  absl::StatusOr<PartitionExplainer> e =
      PartitionExplainer::Create(inst.cells, LocalRule::kConstantPositive);
  if (!e.ok()) return e.status();
  inst.explainer = std::make_unique<PartitionExplainer>(*std::move(e));
  return inst;
}

absl::StatusOr<std::unique_ptr<Auditor>> MakeAuditor(const std::string& name,
                                                     const AuditorConfig& cfg,
                                                     int64_t n) {
  if (name == "simple_audit") {
    return std::make_unique<SimpleAuditAuditor>(cfg);
  }
  if (name == "fixed_split") {
    return std::make_unique<FixedSplitAuditor>(cfg.gamma,
                                               std::max<int64_t>(1, n / 2), 1);
  }
  if (name == "constant") {
    return std::make_unique<ConstantAuditor>(0.5 + 2.0 * cfg.eps2);
  }
  if (absl::StartsWith(name, "constant:")) {
    char* end = nullptr;
    const std::string v = name.substr(9);
    const double value = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size()) {
      return MakeError(ErrorKind::kConfigInvalid,
                       "auditors: bad constant '" + name + "'");
    }
    return std::make_unique<ConstantAuditor>(value);
  }
  if (name == "coin_flip") {
    return std::make_unique<CoinFlipAuditor>(0.5, 0.5 + 4.0 * cfg.eps2);
  }
  if (name == "oracle") return std::make_unique<OracleAuditor>(cfg.gamma);
  return MakeError(ErrorKind::kConfigInvalid,
                   "auditors: unknown auditor '" + name + "'");
}

absl::StatusOr<RunResult> RunExperiment(const ExperimentConfig& cfg_in,
                                        const RunOptions& options) {
  ExperimentConfig cfg = cfg_in;
  if (options.seed) cfg.master_seed = *options.seed;
  if (options.out_dir) cfg.output_dir = *options.out_dir;
  if (absl::Status s = ValidateConfig(cfg); !s.ok()) return s;
  int workers = cfg.workers > 0 ? cfg.workers : DefaultWorkers(1);
  if (options.workers && *options.workers > 0) workers = *options.workers;

  const auto start = std::chrono::steady_clock::now();
  Context ctx{cfg, cfg.master_seed, workers, cfg.Echo()};
  ExperimentRecord rec;
  rec.kind = std::string(ExperimentKindName(cfg.kind));
  rec.seed = cfg.master_seed;
  bool pass = false;
  absl::Status s;
  switch (cfg.kind) {
    case ExperimentKind::kAuditUpper:
      s = RunAuditUpper(ctx, rec, pass);
      break;
    case ExperimentKind::kAuditLower:
      s = RunAuditLower(ctx, rec, pass);
      break;
    case ExperimentKind::kMomentCheck:
      s = RunMomentCheck(ctx, rec, pass);
      break;
    case ExperimentKind::kWorldSeparation:
      s = RunWorldSep(ctx, rec, pass);
      break;
    case ExperimentKind::kSpheresScan:
      s = RunSpheresScan(ctx, rec, pass);
      break;
    case ExperimentKind::kLocalitySweep:
      s = RunLocalitySweep(ctx, rec, pass);
      break;
  }
  if (!s.ok()) return s;
  rec.config = std::move(ctx.echo);
  rec.verdict = pass ? "PASS" : "FAIL";
  rec.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  RunResult result{std::move(rec), pass, cfg.output_dir};
  if (options.write) {
    if (absl::Status w = WriteRecord(cfg.output_dir, result.record); !w.ok()) {
      return w;
    }
  }
  return result;
}

absl::StatusOr<RunResult> RunConfigFile(const std::string& path,
                                        const RunOptions& options) {
  absl::StatusOr<ExperimentConfig> cfg = LoadConfig(path);
  if (!cfg.ok()) return cfg.status();
  return RunExperiment(*cfg, options);
}

int ExitCode(const absl::StatusOr<RunResult>& result) {
  if (!result.ok()) return 1;
  return result->pass ? 0 : 2;
}

}  // namespace locaudit

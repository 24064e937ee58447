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

#include "locaudit/auditor/auditor.h"

#include <algorithm>

#include "absl/strings/str_format.h"
#include "locaudit/auditor/simple_audit.h"
#include "locaudit/core/errors.h"
#include "locaudit/core/measures.h"
#include "locaudit/core/parallel.h"

namespace locaudit {

absl::StatusOr<double> SimpleAuditAuditor::Estimate(const AuditInput& input,
                                                    const AuditContext&,
                                                    Rng&) const {
  absl::StatusOr<AuditReport> report = SimpleAudit(input, cfg_);
  if (!report.ok()) return report.status();
  return report->estimate;
}

absl::StatusOr<double> FixedSplitAuditor::Estimate(const AuditInput& input,
                                                   const AuditContext&,
                                                   Rng&) const {
  absl::StatusOr<AuditReport> report =
      SimpleAuditWith(input, gamma_, m_, k_);
  if (!report.ok()) return report.status();
  return report->estimate;
}

std::string FixedSplitAuditor::name() const {
  return absl::StrFormat("simple_audit(m=%d,k=%d)", m_, k_);
}

std::string ConstantAuditor::name() const {
  return absl::StrFormat("constant(%.6g)", value_);
}

absl::StatusOr<double> CoinFlipAuditor::Estimate(const AuditInput&,
                                                 const AuditContext&,
                                                 Rng& rng) const {
  return Bernoulli(rng, 0.5) ? a_ : b_;
}

std::string CoinFlipAuditor::name() const {
  return absl::StrFormat("coin_flip(%.6g, %.6g)", a_, b_);
}

absl::StatusOr<double> OracleAuditor::Estimate(const AuditInput&,
                                               const AuditContext& ctx,
                                               Rng&) const {
  if (ctx.exact == nullptr || !*ctx.exact) {
    return MakeError(ErrorKind::kOracleUnavailable,
                     "oracle auditor run without an exact loss oracle");
  }
  return (*ctx.exact)(gamma_);
}

nlohmann::json TrialToJson(const TrialRecord& t) {
  nlohmann::json j;
  j["trial"] = t.trial;
  j["seed"] = t.seed;
  j["world"] = t.world;
  j["estimate"] = t.estimate.has_value() ? nlohmann::json(*t.estimate)
                                         : nlohmann::json(nullptr);
  j["error"] = t.error;
  j["interval"] = {t.interval.first, t.interval.second};
  j["failed"] = t.failed;
  return j;
}

absl::StatusOr<TrialRecord> TrialFromJson(const nlohmann::json& j) {
  try {
    TrialRecord t;
    t.trial = j.at("trial").get<int64_t>();
    t.seed = j.at("seed").get<uint64_t>();
    t.world = j.at("world").get<int>();
    if (!j.at("estimate").is_null()) t.estimate = j["estimate"].get<double>();
    t.error = j.at("error").get<std::string>();
    t.interval = {j.at("interval").at(0).get<double>(),
                  j.at("interval").at(1).get<double>()};
    t.failed = j.at("failed").get<bool>();
    return t;
  } catch (const nlohmann::json::exception& e) {
    return MakeError(ErrorKind::kRecordUnreadable, e.what());
  }
}

nlohmann::json FailureRateReport::ToJson() const {
  nlohmann::json j;
  j["auditor"] = auditor;
  j["n"] = n;
  j["trials"] = trials;
  j["failures"] = failures;
  j["errors"] = errors;
  j["failure_rate"] = failure_rate;
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRecord& t : per_trial) rows.push_back(TrialToJson(t));
  j["per_trial"] = std::move(rows);
  return j;
}

FailureRateReport Summarize(std::string auditor, int64_t n,
                            std::vector<TrialRecord> trials) {
  FailureRateReport r;
  r.auditor = std::move(auditor);
  r.n = n;
  r.trials = static_cast<int64_t>(trials.size());
  for (const TrialRecord& t : trials) {
    if (t.failed) ++r.failures;
    if (!t.error.empty()) ++r.errors;
  }
  r.failure_rate = r.trials == 0 ? 0.0
                                 : static_cast<double>(r.failures) /
                                       static_cast<double>(r.trials);
  r.per_trial = std::move(trials);
  return r;
}

AuditInput SampleAuditInput(const DistributionOracle& dist,
                            const Classifier& f, const Explainer& explainer,
                            int64_t n, Rng& rng) {
  AuditInput in;
  in.points.reserve(n);
  in.labels.reserve(n);
  in.explanations.reserve(n);
  for (int64_t i = 0; i < n; ++i) {
    Point x = dist.Sample(rng);
    in.labels.push_back(f.Classify(x));
    in.explanations.push_back(explainer.Explain(f, x));
    in.points.push_back(std::move(x));
  }
  return in;
}

FailureRateReport RunAuditTrials(const DistributionOracle& dist,
                                 const Classifier& f,
                                 const Explainer& explainer,
                                 const ExactLossOracle& exact,
                                 const AuditorConfig& cfg,
                                 const Auditor& auditor, int64_t n,
                                 int64_t trials, uint64_t seed, int workers) {
  const std::pair<double, double> interval = *AccuracyInterval(&exact, cfg);
  std::vector<TrialRecord> records(trials);
  ParallelFor(trials, workers, [&](int64_t t) {
    TrialRecord& rec = records[t];
    rec.trial = t;
    rec.seed = DeriveSeed(seed, t);
    rec.interval = interval;
    Rng rng(rec.seed);
    const AuditInput input = SampleAuditInput(dist, f, explainer, n, rng);
    const AuditContext ctx{&exact};
    absl::StatusOr<double> est = auditor.Estimate(input, ctx, rng);
    if (est.ok()) {
      rec.estimate = *est;
      rec.failed = !InInterval(*est, interval);
    } else {
      rec.error = std::string(est.status().message());
      rec.failed = true;
    }
  });
  return Summarize(auditor.name(), n, std::move(records));
}

CoverageReport RunCoverageTrials(const DistributionOracle& dist,
                                 const Classifier& f,
                                 const Explainer& explainer, int64_t k,
                                 int64_t n_prime, int64_t trials,
                                 uint64_t seed, int workers) {
  std::vector<char> covered(trials, 0);
  std::vector<double> masses(trials, 1.0);
  ParallelFor(trials, workers, [&](int64_t t) {
    Rng rng(DeriveSeed(seed, t));
    const Point anchor = dist.Sample(rng);
    const LocalExplanation e = explainer.Explain(f, anchor);
    int64_t hits = 0;
    for (int64_t i = 0; i < n_prime; ++i) {
      if (Contains(e.region, dist.Sample(rng))) ++hits;
    }
    covered[t] = hits >= k;
    if (const auto* r = std::get_if<HyperRectangle>(&e.region)) {
      if (auto mass = dist.RectMass(*r)) masses[t] = *mass;
    } else if (const auto* b = std::get_if<Ball>(&e.region)) {
      if (auto mass = dist.BallMass(*b)) masses[t] = *mass;
    }
  });
  CoverageReport out;
  out.k = k;
  out.n_prime = n_prime;
  out.trials = trials;
  out.covered = std::count(covered.begin(), covered.end(), 1);
  out.frequency = trials == 0 ? 0.0
                              : static_cast<double>(out.covered) /
                                    static_cast<double>(trials);
  if (trials > 0) {
    out.min_region_mass = *std::min_element(masses.begin(), masses.end());
  }
  return out;
}

}  // namespace locaudit

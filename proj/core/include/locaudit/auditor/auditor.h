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

// Auditors as interchangeable strategies, and the repeated-trial driver that
// scores them against an exact target interval.

#ifndef LOCAUDIT_AUDITOR_AUDITOR_H_
#define LOCAUDIT_AUDITOR_AUDITOR_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "locaudit/auditor/audit_types.h"
#include "locaudit/auditor/bounds.h"
#include "locaudit/core/classifiers.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/oracle.h"

namespace locaudit {

// Side information an auditor may (illegitimately) use. Only the oracle
// auditor reads it; real auditors see the AuditInput alone.
struct AuditContext {
  const ExactLossOracle* exact = nullptr;
};

class Auditor {
 public:
  virtual ~Auditor() = default;
  virtual absl::StatusOr<double> Estimate(const AuditInput& input,
                                          const AuditContext& ctx,
                                          Rng& rng) const = 0;
  virtual std::string name() const = 0;
};

// The two-half estimator with m and k from the config.
class SimpleAuditAuditor final : public Auditor {
 public:
  explicit SimpleAuditAuditor(AuditorConfig cfg) : cfg_(cfg) {}
  absl::StatusOr<double> Estimate(const AuditInput& input,
                                  const AuditContext& ctx,
                                  Rng& rng) const override;
  std::string name() const override { return "simple_audit"; }

 private:
  AuditorConfig cfg_;
};

// The same estimator with m and k fixed by hand, e.g. m = n / 2 when the
// sample is too small for the config's m.
class FixedSplitAuditor final : public Auditor {
 public:
  FixedSplitAuditor(double gamma, int64_t m, int64_t k)
      : gamma_(gamma), m_(m), k_(k) {}
  absl::StatusOr<double> Estimate(const AuditInput& input,
                                  const AuditContext& ctx,
                                  Rng& rng) const override;
  std::string name() const override;

 private:
  double gamma_;
  int64_t m_;
  int64_t k_;
};

// Ignores the data.
class ConstantAuditor final : public Auditor {
 public:
  explicit ConstantAuditor(double value) : value_(value) {}
  absl::StatusOr<double> Estimate(const AuditInput&, const AuditContext&,
                                  Rng&) const override {
    return value_;
  }
  std::string name() const override;

 private:
  double value_;
};

// Outputs one of two values with probability 1/2 each.
class CoinFlipAuditor final : public Auditor {
 public:
  CoinFlipAuditor(double a, double b) : a_(a), b_(b) {}
  absl::StatusOr<double> Estimate(const AuditInput&, const AuditContext&,
                                  Rng& rng) const override;
  std::string name() const override;

 private:
  double a_;
  double b_;
};

// Returns the exact L_gamma from the context; OracleUnavailable without one.
class OracleAuditor final : public Auditor {
 public:
  explicit OracleAuditor(double gamma) : gamma_(gamma) {}
  absl::StatusOr<double> Estimate(const AuditInput& input,
                                  const AuditContext& ctx,
                                  Rng& rng) const override;
  std::string name() const override { return "oracle"; }

 private:
  double gamma_;
};

struct TrialRecord {
  int64_t trial = 0;
  uint64_t seed = 0;
  int world = -1;  // hidden world bit when the instance has one
  std::optional<double> estimate;
  std::string error;  // non-empty when the auditor returned an error
  std::pair<double, double> interval = {0.0, 1.0};
  // An error counts as a failure: the auditor produced no estimate.
  bool failed = false;
};

nlohmann::json TrialToJson(const TrialRecord& t);
absl::StatusOr<TrialRecord> TrialFromJson(const nlohmann::json& j);

struct FailureRateReport {
  std::string auditor;
  int64_t n = 0;
  int64_t trials = 0;
  int64_t failures = 0;
  int64_t errors = 0;
  double failure_rate = 0.0;
  std::vector<TrialRecord> per_trial;

  nlohmann::json ToJson() const;
};

// Folds per-trial records (already in trial order) into rates.
FailureRateReport Summarize(std::string auditor, int64_t n,
                            std::vector<TrialRecord> trials);

// Samples X of size n from dist, labels with f, explains with `explainer`,
// and draws anchors for the auditor.
AuditInput SampleAuditInput(const DistributionOracle& dist,
                            const Classifier& f, const Explainer& explainer,
                            int64_t n, Rng& rng);

// Scores `auditor` over `trials` independent samples of size n on a fixed
// (mu, f, E). Trial t uses DeriveSeed(seed, t).
FailureRateReport RunAuditTrials(const DistributionOracle& dist,
                                 const Classifier& f,
                                 const Explainer& explainer,
                                 const ExactLossOracle& exact,
                                 const AuditorConfig& cfg,
                                 const Auditor& auditor, int64_t n,
                                 int64_t trials, uint64_t seed, int workers);

// Coverage of one anchor region: fraction of trials in which the region of
// a random anchor holds at least k of n_prime fresh points.
struct CoverageReport {
  int64_t k = 0;
  int64_t n_prime = 0;
  int64_t trials = 0;
  int64_t covered = 0;
  double frequency = 0.0;
  double min_region_mass = 1.0;  // smallest exact mass seen, if available
};

CoverageReport RunCoverageTrials(const DistributionOracle& dist,
                                 const Classifier& f,
                                 const Explainer& explainer, int64_t k,
                                 int64_t n_prime, int64_t trials,
                                 uint64_t seed, int workers);

}  // namespace locaudit

#endif  // LOCAUDIT_AUDITOR_AUDITOR_H_

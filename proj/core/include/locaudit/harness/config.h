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

// Experiment configuration: one JSON document per run. Real-valued fields
// accept JSON numbers or decimal strings; K and n also accept "auto".

#ifndef LOCAUDIT_HARNESS_CONFIG_H_
#define LOCAUDIT_HARNESS_CONFIG_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "locaudit/auditor/audit_types.h"
#include "locaudit/distributions/product_distribution.h"

namespace locaudit {

enum class ExperimentKind {
  kAuditUpper,
  kAuditLower,
  kMomentCheck,
  kWorldSeparation,
  kSpheresScan,
  kLocalitySweep,
};

absl::string_view ExperimentKindName(ExperimentKind kind);
absl::StatusOr<ExperimentKind> ParseExperimentKind(absl::string_view name);

// {"kind": "uniform_box", "lo": [...], "hi": [...]} (or "dim" for the unit
// cube), {"kind": "gaussian", "mean": [...], "sd": [...]} (or "dim" for a
// standard normal), {"kind": "spheres", "dim": d}.
struct DistributionSpec {
  std::string kind = "uniform_box";
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<double> mean;
  std::vector<double> sd;
  int dim = 0;

  nlohmann::json ToJson() const;
};

absl::StatusOr<DistributionSpec> ParseDistributionSpec(const nlohmann::json& j);
// Product distributions only; ConfigInvalid for "spheres".
absl::StatusOr<ProductDistribution> MakeProductDistribution(
    const DistributionSpec& spec);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kAuditUpper;
  DistributionSpec distribution;
  AuditorConfig auditor;
  double lambda = 0.0;
  std::optional<int64_t> K;  // nullopt: choose_K
  std::optional<int64_t> n;  // nullopt: the kind's bound calculator
  int64_t trials = 200;
  uint64_t master_seed = 1;
  std::string output_dir = "out";
  int workers = 0;  // 0: AUDIT_WORKERS, else 1
  double tolerance = 0.0;  // kind-specific slack on the verdict threshold

  // audit_upper / audit_lower
  std::vector<std::string> auditors;
  int cells = 4;           // audit_upper: equal-mass slabs along axis 0
  int negative_cells = 2;  // audit_upper: f = -1 on the first slabs
  int64_t coverage_trials = 0;
  int64_t collision_trials = 0;
  double delta_c = 0.01;

  // moment_check: (gamma, eps1, eps2) triples
  std::vector<std::array<double, 3>> grid;

  // spheres_scan
  std::vector<int> dims;
  int balls = 50;
  double slack = 0.02;
  int fit_points = 4000;

  // locality_sweep
  std::vector<double> lambdas;

  // Resolved configuration as written to the record.
  nlohmann::json Echo() const;
};

// Parses and fills kind defaults. Errors: ConfigInvalid naming the field.
absl::StatusOr<ExperimentConfig> ParseConfig(const nlohmann::json& j);
absl::StatusOr<ExperimentConfig> LoadConfig(const std::string& path);

// Gate checks for the kind (e.g. eps1 < 1/48 for the hard instance), run
// before any work. Errors: ConfigInvalid naming the field and the gate.
absl::Status ValidateConfig(const ExperimentConfig& cfg);

// Twenty admissible (gamma, eps1, eps2) triples.
std::vector<std::array<double, 3>> DefaultMomentGrid();

}  // namespace locaudit

#endif  // LOCAUDIT_HARNESS_CONFIG_H_

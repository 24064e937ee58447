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

// Dispatch of one experiment config to its driver, with verdicts.

#ifndef LOCAUDIT_HARNESS_RUNNER_H_
#define LOCAUDIT_HARNESS_RUNNER_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/auditor/auditor.h"
#include "locaudit/core/explainers.h"
#include "locaudit/core/loss_profile.h"
#include "locaudit/distributions/product_distribution.h"
#include "locaudit/harness/config.h"
#include "locaudit/harness/record.h"

namespace locaudit {

// Equal-mass slabs along axis 0. f = -1 on the first `negative_cells`
// slabs and +1 elsewhere; the explainer answers each slab with constant +1,
// so slab losses are 1 (negative) or 0 and L_gamma = negative / cells.
struct SlabInstance {
  ProductDistribution dist = ProductDistribution::UniformCube(1);
  std::vector<HyperRectangle> cells;
  double cut = 0.0;  // f(x) = -1 iff x[0] <= cut
  std::unique_ptr<Classifier> f;
  std::unique_ptr<PartitionExplainer> explainer;
  LossProfile profile;
};

absl::StatusOr<SlabInstance> BuildSlabInstance(const ProductDistribution& dist,
                                               int cells, int negative_cells);

// simple_audit, fixed_split (m = n/2, k = 1), constant (1/2 + 2 eps2),
// constant:<v>, coin_flip (1/2 or 1/2 + 4 eps2), oracle.
absl::StatusOr<std::unique_ptr<Auditor>> MakeAuditor(const std::string& name,
                                                     const AuditorConfig& cfg,
                                                     int64_t n);

struct RunOptions {
  std::optional<uint64_t> seed;         // overrides master_seed
  std::optional<std::string> out_dir;   // overrides output_dir
  std::optional<int> workers;           // overrides config and AUDIT_WORKERS
  bool write = true;                    // persist the record
};

struct RunResult {
  ExperimentRecord record;
  bool pass = false;
  std::string out_dir;
};

// Validates, runs and (optionally) persists. Errors: ConfigInvalid before
// any work, module errors otherwise.
absl::StatusOr<RunResult> RunExperiment(const ExperimentConfig& cfg,
                                        const RunOptions& options);
absl::StatusOr<RunResult> RunConfigFile(const std::string& path,
                                        const RunOptions& options);

// 0 on PASS, 2 on FAIL, 1 on error.
int ExitCode(const absl::StatusOr<RunResult>& result);

}  // namespace locaudit

#endif  // LOCAUDIT_HARNESS_RUNNER_H_

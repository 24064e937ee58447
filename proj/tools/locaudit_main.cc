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

// locaudit run | plot | bounds

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "absl/strings/str_format.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/auditor/bounds.h"
#include "locaudit/core/errors.h"
#include "locaudit/harness/plot.h"
#include "locaudit/harness/runner.h"

namespace {

// Domain errors already lead with their kind.
std::string Describe(const absl::Status& s) {
  return locaudit::ErrorKindOf(s) ? std::string(s.message()) : s.ToString();
}

int Bounds(const locaudit::AuditorConfig& cfg, double lambda) {
  if (absl::Status s = cfg.Validate(); !s.ok()) {
    std::cerr << Describe(s) << "\n";
    return 1;
  }
  const int64_t m = locaudit::SimpleAuditM(cfg);
  const int64_t k = locaudit::SimpleAuditK(cfg);
  std::cout << absl::StrFormat("simple_audit m = %d\n", m);
  std::cout << absl::StrFormat("simple_audit k = %d\n", k);
  absl::StatusOr<int64_t> upper = locaudit::UpperBoundSamples(cfg, lambda);
  if (upper.ok()) {
    std::cout << absl::StrFormat("upper_bound_samples = %d\n", *upper);
  } else {
    std::cout << "upper_bound_samples: " << Describe(upper.status()) << "\n";
  }
  std::cout << absl::StrFormat("coverage_samples n' = %.17g\n",
                               locaudit::CoverageSamples(k, cfg, lambda));
  absl::StatusOr<int64_t> lower = locaudit::LowerBoundSamples(cfg, lambda);
  if (lower.ok()) {
    std::cout << absl::StrFormat("lower_bound_samples = %d\n", *lower);
  } else {
    std::cout << "lower_bound_samples: " << Describe(lower.status()) << "\n";
  }
  if (locaudit::CheckLowerBoundGates(cfg, lambda).ok()) {
    const int l = locaudit::MomentMatchingL(cfg.eps1, cfg.eps2);
    std::cout << absl::StrFormat("moment system l = %d, m = %d, eps = %.17g\n",
                                 l, 2 * l, 1.0 / (8.0 * l));
    if (locaudit::GammaNeedsWarning(cfg.gamma)) {
      std::cout << "warning: gamma >= 1/48 lies outside the range the root "
                   "construction is proved for\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local explanation audit simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> workers;
  CLI::App* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("config", config_path, "Experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--seed", seed, "Override master_seed");
  run->add_option("--out", out_dir, "Override output_dir");
  run->add_option("--workers", workers,
                  "Worker threads (default: AUDIT_WORKERS, else 1)");

  std::string record_path;
  std::string svg_path;
  CLI::App* plot = app.add_subcommand("plot", "Render a record as SVG");
  plot->add_option("record", record_path, "record.json")->required();
  plot->add_option("--out", svg_path, "Output SVG path")->required();

  locaudit::AuditorConfig cfg;
  double lambda = 0.0;
  CLI::App* bounds =
      app.add_subcommand("bounds", "Print the closed-form sample counts");
  bounds->add_option("--gamma", cfg.gamma)->required();
  bounds->add_option("--eps1", cfg.eps1)->required();
  bounds->add_option("--eps2", cfg.eps2)->required();
  bounds->add_option("--delta", cfg.delta)->required();
  bounds->add_option("--lambda", lambda)->required();

  CLI11_PARSE(app, argc, argv);

  if (*run) {
    locaudit::RunOptions options;
    options.seed = seed;
    options.out_dir = out_dir;
    options.workers = workers;
    const absl::StatusOr<locaudit::RunResult> result =
        locaudit::RunConfigFile(config_path, options);
    if (!result.ok()) {
      std::cerr << Describe(result.status()) << "\n";
    } else {
      std::cout << absl::StrFormat("%s %s (%.2f s) -> %s\n",
                                   result->record.kind, result->record.verdict,
                                   result->record.wall_clock_seconds,
                                   result->out_dir);
      std::cout << result->record.aggregate.dump(2) << "\n";
    }
    return locaudit::ExitCode(result);
  }
  if (*plot) {
    if (absl::Status s = locaudit::PlotRecordFile(record_path, svg_path);
        !s.ok()) {
      std::cerr << Describe(s) << "\n";
      return 1;
    }
    return 0;
  }
  return Bounds(cfg, lambda);
}

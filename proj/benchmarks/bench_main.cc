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

#include <memory>

#include "benchmark/benchmark.h"
#include "locaudit/adversary/experiment.h"
#include "locaudit/adversary/f_star.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/auditor/bounds.h"
#include "locaudit/auditor/simple_audit.h"
#include "locaudit/core/random.h"
#include "locaudit/distributions/product_distribution.h"
#include "locaudit/harness/runner.h"
#include "locaudit/spheres/psi.h"

namespace locaudit {
namespace {

const HardInstance& Hard() {
  static const HardInstance* h = [] {
    AuditorConfig cfg;
    cfg.gamma = 0.02;
    cfg.eps1 = 0.015;
    cfg.eps2 = 1.0 / 64.0;
    cfg.delta = 0.1;
    return new HardInstance(
        *BuildHardInstance(ProductDistribution::UniformCube(2), cfg, 2e-5));
  }();
  return *h;
}

void BM_Psi(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  double t = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Psi(t, d));
    t = t < 3.0 ? t + 0.01 : 0.1;
  }
}
BENCHMARK(BM_Psi)->Arg(5)->Arg(20);

void BM_QOffsets(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(QOffsets(l));
}
BENCHMARK(BM_QOffsets)->Arg(1)->Arg(4)->Arg(8);

void BM_PartitionLocate(benchmark::State& state) {
  const PartitionSpec& p = *Hard().partition;
  Rng rng(1);
  for (auto _ : state) {
    const Point x = p.dist().Sample(rng);
    benchmark::DoNotOptimize(p.LocateBoth(x));
  }
}
BENCHMARK(BM_PartitionLocate);

void BM_SampleFStar(benchmark::State& state) {
  Rng rng(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SampleFStar(Hard().partition, Hard().probs, rng));
  }
}
BENCHMARK(BM_SampleFStar)->Unit(benchmark::kMillisecond);

void BM_SimpleAudit(benchmark::State& state) {
  AuditorConfig cfg;
  cfg.eps1 = 0.2;
  cfg.eps2 = 0.1;
  cfg.gamma = 0.3;
  cfg.delta = 0.1;
  auto inst = BuildSlabInstance(ProductDistribution::UniformCube(1), 4, 2);
  Rng rng(3);
  const AuditInput in = SampleAuditInput(inst->dist, *inst->f,
                                         *inst->explainer, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(SimpleAudit(in, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimpleAudit)->Arg(117707)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace locaudit

BENCHMARK_MAIN();

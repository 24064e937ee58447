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

#include <filesystem>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"
#include "locaudit/core/errors.h"
#include "locaudit/harness/config.h"
#include "locaudit/harness/plot.h"
#include "locaudit/harness/record.h"
#include "locaudit/harness/runner.h"

namespace locaudit {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string ConfigPath(const std::string& name) {
  return std::string(LOCAUDIT_SOURCE_DIR) + "/configs/" + name;
}

std::string FreshDir(const std::string& name) {
  const fs::path p = fs::path(::testing::TempDir()) / ("locaudit_" + name);
  fs::remove_all(p);
  return p.string();
}

size_t Count(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(ConfigTest, KindNamesRoundTrip) {
  for (auto k : {ExperimentKind::kAuditUpper, ExperimentKind::kAuditLower,
                 ExperimentKind::kMomentCheck, ExperimentKind::kWorldSeparation,
                 ExperimentKind::kSpheresScan,
                 ExperimentKind::kLocalitySweep}) {
    auto back = ParseExperimentKind(ExperimentKindName(k));
    ASSERT_TRUE(back.ok());
    EXPECT_EQ(*back, k);
  }
  EXPECT_TRUE(HasErrorKind(ParseExperimentKind("audit_sideways").status(),
                           ErrorKind::kConfigInvalid));
}

TEST(ConfigTest, ShippedConfigsParseAndEchoRoundTrips) {
  for (const char* name :
       {"audit_upper.json", "audit_lower.json", "moment_check.json",
        "world_separation.json", "spheres_scan.json", "locality_sweep.json"}) {
    auto cfg = LoadConfig(ConfigPath(name));
    ASSERT_TRUE(cfg.ok()) << name << ": " << cfg.status();
    EXPECT_TRUE(ValidateConfig(*cfg).ok()) << name;
    auto again = ParseConfig(cfg->Echo());
    ASSERT_TRUE(again.ok()) << name << ": " << again.status();
    EXPECT_EQ(again->Echo(), cfg->Echo()) << name;
  }
}

TEST(ConfigTest, DecimalStringsAreExact) {
  auto cfg = ParseConfig(json::parse(R"({"kind": "audit_lower",
      "gamma": "0.02", "eps1": 0.015, "eps2": "0.015625", "lambda": "2e-5"})"));
  ASSERT_TRUE(cfg.ok()) << cfg.status();
  EXPECT_EQ(cfg->auditor.gamma, 0.02);
  EXPECT_EQ(cfg->auditor.eps1, 0.015);
  EXPECT_EQ(cfg->lambda, 2e-5);
  EXPECT_FALSE(cfg->n.has_value());
  EXPECT_FALSE(cfg->K.has_value());
}

TEST(ConfigTest, GateViolationsNameTheField) {
  auto cfg = LoadConfig(ConfigPath("audit_lower_bad_gate.json"));
  ASSERT_TRUE(cfg.ok());
  const absl::Status s = ValidateConfig(*cfg);
  EXPECT_TRUE(HasErrorKind(s, ErrorKind::kConfigInvalid));
  EXPECT_NE(s.message().find("eps1: ε₁ < 1/48 violated"), std::string::npos)
      << s;
  auto run = RunConfigFile(ConfigPath("audit_lower_bad_gate.json"),
                           {.write = false});
  EXPECT_EQ(ExitCode(run), 1);

  auto lam = ParseConfig(json::parse(R"({"kind": "world_separation",
      "gamma": "0.02", "eps1": "0.015", "eps2": "0.015625",
      "lambda": "0.001"})"));
  ASSERT_TRUE(lam.ok());
  EXPECT_NE(ValidateConfig(*lam).message().find("λ < ε₂²"), std::string::npos);
  EXPECT_FALSE(ParseConfig(json::parse(R"({"kind": "moment_check",
      "trials": "many"})")).ok());
}

TEST(RecordTest, CsvFormatting) {
  CsvTable t{{"a", "b"}, {{"1", "2"}, {CsvNumber(0.1), CsvNumber(1.0 / 0.0)}}};
  EXPECT_EQ(t.Render(), "a,b\n1,2\n0.10000000000000001,inf\n");
  EXPECT_EQ(CsvNumber(0.5), "0.5");
}

TEST(RecordTest, JsonRoundTrip) {
  ExperimentRecord r;
  r.kind = "moment_check";
  r.config = {{"kind", "moment_check"}, {"output_dir", "x"}};
  r.seed = 99;
  r.per_trial = json::array({{{"t", 1}}});
  r.aggregate = {{"ok", true}};
  r.verdict = "PASS";
  r.wall_clock_seconds = 1.5;
  r.tables["t"] = CsvTable{{"x"}, {{"1"}}};
  auto back = ExperimentRecord::FromJson(r.ToJson());
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->ToJson(), r.ToJson());
  const json agg = r.AggregateJson();
  EXPECT_FALSE(agg.contains("wall_clock_seconds"));
  EXPECT_FALSE(agg["config"].contains("output_dir"));
  EXPECT_TRUE(HasErrorKind(ExperimentRecord::FromJson(json(3)).status(),
                           ErrorKind::kRecordUnreadable));
  EXPECT_TRUE(HasErrorKind(ReadRecord("/nonexistent/record.json").status(),
                           ErrorKind::kRecordUnreadable));
}

TEST(RunnerTest, MomentCheckPassesAndWritesFiles) {
  const std::string dir = FreshDir("moment");
  auto res = RunConfigFile(ConfigPath("moment_check.json"), {.out_dir = dir});
  ASSERT_TRUE(res.ok()) << res.status();
  EXPECT_EQ(ExitCode(res), 0);
  EXPECT_EQ(res->record.verdict, "PASS");
  for (const char* f : {"record.json", "aggregate.json", "moment_check.csv",
                        "residuals.csv"}) {
    EXPECT_TRUE(fs::exists(fs::path(dir) / f)) << f;
  }
  auto back = ReadRecord(dir + "/record.json");
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(back->AggregateJson(), res->record.AggregateJson());
}

TEST(RunnerTest, LocalitySweepIsMonotone) {
  auto res = RunConfigFile(ConfigPath("locality_sweep.json"), {.write = false});
  ASSERT_TRUE(res.ok()) << res.status();
  EXPECT_TRUE(res->pass);
  double prev_upper = 1e300;
  for (const json& row : res->record.per_trial) {
    const double up = row["upper_bound_n"].get<double>();
    EXPECT_LE(up, prev_upper);
    prev_upper = up;
    if (!row["lower_bound_n"].is_null()) {
      EXPECT_LE(row["lower_bound_n"].get<double>(), up);
    }
  }
}

TEST(RunnerTest, AggregateIndependentOfWorkerCount) {
  auto cfg = LoadConfig(ConfigPath("world_separation.json"));
  ASSERT_TRUE(cfg.ok());
  cfg->trials = 6;
  auto a = RunExperiment(*cfg, {.workers = 1, .write = false});
  auto b = RunExperiment(*cfg, {.workers = 3, .write = false});
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->record.AggregateJson(), b->record.AggregateJson());
  EXPECT_EQ(a->record.tables.at("separation").Render(),
            b->record.tables.at("separation").Render());
  auto c = RunExperiment(*cfg, {.seed = 14, .workers = 1, .write = false});
  ASSERT_TRUE(c.ok());
  EXPECT_NE(a->record.tables.at("separation").Render(),
            c->record.tables.at("separation").Render());
}

TEST(PlotTest, EmptyRecordDrawsEmptyAxes) {
  const std::string svg = RenderPlot(json::object());
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("Empty record"), std::string::npos);
  EXPECT_EQ(RenderPlot(json::object()), svg);
}

TEST(PlotTest, MomentPlotHasBothGuides) {
  const std::string dir = FreshDir("moment_plot");
  auto res = RunConfigFile(ConfigPath("moment_check.json"), {.out_dir = dir});
  ASSERT_TRUE(res.ok());
  const std::string out = dir + "/plot.svg";
  ASSERT_TRUE(PlotRecordFile(dir + "/record.json", out).ok());
  auto svg = ReadTextFile(out);
  ASSERT_TRUE(svg.ok());
  EXPECT_GE(Count(*svg, "class=\"guide\""), 2u);
  EXPECT_EQ(*svg, RenderPlot(res->record.ToJson()));
  EXPECT_TRUE(HasErrorKind(PlotRecordFile(dir + "/missing.json", out),
                           ErrorKind::kRecordUnreadable));
}

}  // namespace
}  // namespace locaudit

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

#include "locaudit/harness/record.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

absl::Status Unreadable(const std::string& why) {
  return MakeError(ErrorKind::kRecordUnreadable, why);
}

nlohmann::json TableToJson(const CsvTable& t) {
  return {{"header", t.header}, {"rows", t.rows}};
}

}  // namespace

std::string CsvNumber(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return absl::StrFormat("%.17g", v);
}

std::string CsvTable::Render() const {
  std::string out = absl::StrJoin(header, ",");
  out += '\n';
  for (const auto& row : rows) {
    out += absl::StrJoin(row, ",");
    out += '\n';
  }
  return out;
}

nlohmann::json ExperimentRecord::AggregateJson() const {
  nlohmann::json j;
  j["record_version"] = kExperimentRecordVersion;
  j["tool"] = tool;
  j["version"] = version;
  j["kind"] = kind;
  j["config"] = config;
  // Where the run was written is not part of its result.
  if (j["config"].is_object()) j["config"].erase("output_dir");
  j["seed"] = seed;
  j["aggregate"] = aggregate;
  j["verdict"] = verdict;
  return j;
}

nlohmann::json ExperimentRecord::ToJson() const {
  nlohmann::json j = AggregateJson();
  j["config"] = config;
  j["per_trial"] = per_trial;
  j["wall_clock_seconds"] = wall_clock_seconds;
  nlohmann::json t = nlohmann::json::object();
  for (const auto& [name, table] : tables) t[name] = TableToJson(table);
  j["tables"] = std::move(t);
  return j;
}

absl::StatusOr<ExperimentRecord> ExperimentRecord::FromJson(
    const nlohmann::json& j) {
  try {
    if (j.at("record_version").get<int>() != kExperimentRecordVersion) {
      return Unreadable("unsupported record version");
    }
    ExperimentRecord r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.kind = j.at("kind").get<std::string>();
    r.config = j.at("config");
    r.seed = j.at("seed").get<uint64_t>();
    r.aggregate = j.at("aggregate");
    r.verdict = j.at("verdict").get<std::string>();
    r.per_trial = j.value("per_trial", nlohmann::json::array());
    r.wall_clock_seconds = j.value("wall_clock_seconds", 0.0);
    if (j.contains("tables")) {
      for (const auto& [name, t] : j.at("tables").items()) {
        CsvTable table;
        table.header = t.at("header").get<std::vector<std::string>>();
        table.rows = t.at("rows").get<std::vector<std::vector<std::string>>>();
        r.tables[name] = std::move(table);
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    return Unreadable(e.what());
  }
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::InternalError("cannot write " + path);
  out << text;
  out.close();
  if (!out) return absl::InternalError("write failed for " + path);
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return Unreadable("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

absl::Status WriteRecord(const std::string& dir, const ExperimentRecord& r) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return absl::InternalError("cannot create " + dir + ": " + ec.message());
  const std::filesystem::path base(dir);
  if (absl::Status s = WriteTextFile((base / "record.json").string(),
                                     r.ToJson().dump(2) + "\n");
      !s.ok()) {
    return s;
  }
  if (absl::Status s = WriteTextFile((base / "aggregate.json").string(),
                                     r.AggregateJson().dump(2) + "\n");
      !s.ok()) {
    return s;
  }
  for (const auto& [name, table] : r.tables) {
    if (absl::Status s =
            WriteTextFile((base / (name + ".csv")).string(), table.Render());
        !s.ok()) {
      return s;
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<ExperimentRecord> ReadRecord(const std::string& path) {
  absl::StatusOr<std::string> text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  nlohmann::json j = nlohmann::json::parse(*text, nullptr, false);
  if (j.is_discarded()) return Unreadable("malformed JSON in " + path);
  return ExperimentRecord::FromJson(j);
}

}  // namespace locaudit

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

// On-disk results of one run. record.json holds everything;
// aggregate.json drops the wall clock so reruns compare byte-for-byte.

#ifndef LOCAUDIT_HARNESS_RECORD_H_
#define LOCAUDIT_HARNESS_RECORD_H_

#include <map>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "json.hpp"

namespace locaudit {

inline constexpr char kToolName[] = "locaudit";
inline constexpr char kToolVersion[] = "0.1.0";
inline constexpr int kExperimentRecordVersion = 1;

// Header plus rows of preformatted cells.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // ',' separator, '.' decimal, LF line endings, header first.
  std::string Render() const;
};

// "%.17g" for finite values; "nan", "inf", "-inf" otherwise.
std::string CsvNumber(double v);

struct ExperimentRecord {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  std::string kind;
  nlohmann::json config;  // resolved echo
  uint64_t seed = 0;
  nlohmann::json per_trial = nlohmann::json::array();
  nlohmann::json aggregate = nlohmann::json::object();
  std::string verdict = "FAIL";  // "PASS" or "FAIL"
  double wall_clock_seconds = 0.0;
  std::map<std::string, CsvTable> tables;  // name -> <name>.csv

  nlohmann::json ToJson() const;
  // Same as ToJson without the wall clock and CSV tables.
  nlohmann::json AggregateJson() const;
  static absl::StatusOr<ExperimentRecord> FromJson(const nlohmann::json& j);
};

// Writes record.json, aggregate.json and one CSV per table into `dir`,
// creating it if needed.
absl::Status WriteRecord(const std::string& dir, const ExperimentRecord& r);
// Errors: RecordUnreadable.
absl::StatusOr<ExperimentRecord> ReadRecord(const std::string& path);

absl::Status WriteTextFile(const std::string& path, const std::string& text);
absl::StatusOr<std::string> ReadTextFile(const std::string& path);

}  // namespace locaudit

#endif  // LOCAUDIT_HARNESS_RECORD_H_

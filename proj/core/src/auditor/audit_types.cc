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

#include "locaudit/auditor/audit_types.h"

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

bool Open01(double v) { return v > 0.0 && v < 1.0; }

}  // namespace

absl::Status AuditorConfig::Validate() const {
  const std::pair<const char*, double> fields[] = {
      {"eps1", eps1}, {"eps2", eps2}, {"delta", delta}, {"gamma", gamma}};
  for (const auto& [name, v] : fields) {
    if (!Open01(v)) {
      return ParameterOutOfRangeError(
          absl::StrFormat("%s must lie in (0, 1), got %g", name, v));
    }
  }
  if (!(gamma * (1.0 + eps1) < 1.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("gamma (1 + eps1) must be < 1, got %g",
                        gamma * (1.0 + eps1)));
  }
  return absl::OkStatus();
}

absl::Status AuditInput::Validate() const {
  if (labels.size() != points.size() || explanations.size() != points.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "audit input lengths differ: ", points.size(), " points, ",
        labels.size(), " labels, ", explanations.size(), " explanations"));
  }
  for (size_t i = 0; i < points.size(); ++i) {
    if (!(explanations[i].anchor == points[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("explanation ", i, " is anchored at another point"));
    }
  }
  return absl::OkStatus();
}

absl::string_view CountedAsName(CountedAs c) {
  switch (c) {
    case CountedAs::kRed:
      return "red";
    case CountedAs::kBlue:
      return "blue";
    case CountedAs::kSkipped:
      return "skipped";
  }
  return "skipped";
}

absl::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

bool InInterval(double estimate, std::pair<double, double> interval) {
  return interval.first <= estimate && estimate <= interval.second;
}

void AuditReport::Judge(std::pair<double, double> interval) {
  target_interval = interval;
  verdict = InInterval(estimate, interval) ? Verdict::kPass : Verdict::kFail;
}

nlohmann::json AuditReport::ToJson() const {
  nlohmann::json j;
  j["version"] = kAuditReportVersion;
  j["estimate"] = estimate;
  j["m"] = m_used;
  j["k"] = k_used;
  j["n_validated"] = n_validated;
  j["n_skipped"] = n_skipped;
  j["red"] = red;
  j["blue"] = blue;
  if (target_interval.has_value()) {
    j["target_interval"] = {target_interval->first, target_interval->second};
  } else {
    j["target_interval"] = nullptr;
  }
  j["verdict"] = std::string(VerdictName(verdict));
  nlohmann::json anchors = nlohmann::json::array();
  for (const AnchorRecord& a : per_anchor) {
    nlohmann::json r;
    r["anchor_index"] = a.anchor_index;
    r["region_points"] = a.region_points;
    r["disagreements"] = a.disagreements;
    if (a.counted_as == CountedAs::kSkipped) {
      r["empirical_loss"] = nullptr;
    } else {
      r["empirical_loss"] = a.empirical_loss;
    }
    r["counted_as"] = std::string(CountedAsName(a.counted_as));
    anchors.push_back(std::move(r));
  }
  j["per_anchor"] = std::move(anchors);
  return j;
}

absl::StatusOr<AuditReport> AuditReport::FromJson(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kAuditReportVersion) {
      return MakeError(ErrorKind::kRecordUnreadable,
                       "unsupported audit report version");
    }
    AuditReport r;
    r.estimate = j.at("estimate").get<double>();
    r.m_used = j.at("m").get<int64_t>();
    r.k_used = j.at("k").get<int64_t>();
    r.n_validated = j.at("n_validated").get<int64_t>();
    r.n_skipped = j.at("n_skipped").get<int64_t>();
    r.red = j.at("red").get<int64_t>();
    r.blue = j.at("blue").get<int64_t>();
    if (!j.at("target_interval").is_null()) {
      r.target_interval = {j["target_interval"][0].get<double>(),
                           j["target_interval"][1].get<double>()};
    }
    const std::string verdict = j.at("verdict").get<std::string>();
    r.verdict = verdict == "pass"   ? Verdict::kPass
                : verdict == "fail" ? Verdict::kFail
                                    : Verdict::kUnknown;
    for (const auto& a : j.at("per_anchor")) {
      AnchorRecord rec;
      rec.anchor_index = a.at("anchor_index").get<int64_t>();
      rec.region_points = a.at("region_points").get<int64_t>();
      rec.disagreements = a.at("disagreements").get<int64_t>();
      const std::string c = a.at("counted_as").get<std::string>();
      rec.counted_as = c == "red"    ? CountedAs::kRed
                       : c == "blue" ? CountedAs::kBlue
                                     : CountedAs::kSkipped;
      if (!a.at("empirical_loss").is_null()) {
        rec.empirical_loss = a["empirical_loss"].get<double>();
      }
      r.per_anchor.push_back(rec);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    return MakeError(ErrorKind::kRecordUnreadable, e.what());
  }
}

}  // namespace locaudit

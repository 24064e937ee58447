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

#include "locaudit/adversary/serialize.h"

#include <cerrno>
#include <cstdlib>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

absl::Status Unreadable(const std::string& why) {
  return MakeError(ErrorKind::kRecordUnreadable, why);
}

nlohmann::json DecimalArray(const std::vector<double>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (double x : v) a.push_back(ExactDecimal(x));
  return a;
}

absl::StatusOr<std::vector<double>> ParseDecimalArray(const nlohmann::json& j) {
  if (!j.is_array()) return Unreadable("expected an array of decimals");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    absl::StatusOr<double> v = ParseExactDecimal(e);
    if (!v.ok()) return v.status();
    out.push_back(*v);
  }
  return out;
}

}  // namespace

std::string ExactDecimal(double v) { return absl::StrFormat("%.17g", v); }

absl::StatusOr<double> ParseExactDecimal(const nlohmann::json& j) {
  if (!j.is_string()) return Unreadable("expected a decimal string");
  const std::string& s = j.get_ref<const std::string&>();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    return Unreadable(absl::StrFormat("bad decimal '%s'", s));
  }
  return v;
}

nlohmann::json DistributionToJson(const ProductDistribution& dist) {
  nlohmann::json marginals = nlohmann::json::array();
  for (const Marginal& m : dist.marginals()) {
    const bool uniform = m.kind() == Marginal::Kind::kUniform;
    marginals.push_back({{"kind", uniform ? "uniform" : "gaussian"},
                         {"p0", ExactDecimal(m.param0())},
                         {"p1", ExactDecimal(m.param1())}});
  }
  return {{"kind", "product"}, {"marginals", std::move(marginals)}};
}

absl::StatusOr<ProductDistribution> DistributionFromJson(
    const nlohmann::json& j) {
  try {
    std::vector<Marginal> marginals;
    for (const auto& m : j.at("marginals")) {
      absl::StatusOr<double> p0 = ParseExactDecimal(m.at("p0"));
      absl::StatusOr<double> p1 = ParseExactDecimal(m.at("p1"));
      if (!p0.ok()) return p0.status();
      if (!p1.ok()) return p1.status();
      const std::string kind = m.at("kind").get<std::string>();
      absl::StatusOr<Marginal> marginal =
          kind == "uniform"    ? Marginal::Uniform(*p0, *p1)
          : kind == "gaussian" ? Marginal::Gaussian(*p0, *p1)
                               : absl::StatusOr<Marginal>(Unreadable(
                                     "unknown marginal kind " + kind));
      if (!marginal.ok()) return marginal.status();
      marginals.push_back(*marginal);
    }
    return ProductDistribution::Create(std::move(marginals));
  } catch (const nlohmann::json::exception& e) {
    return Unreadable(e.what());
  }
}

nlohmann::json PartitionToJson(const PartitionSpec& p) {
  nlohmann::json j;
  j["version"] = kInstanceRecordVersion;
  j["distribution"] = DistributionToJson(p.dist());
  j["alpha"] = ExactDecimal(p.alpha());
  j["K"] = p.K();
  j["depth"] = p.depth();
  j["support"] = {{"lo", DecimalArray(p.support().lo())},
                  {"hi", DecimalArray(p.support().hi())}};
  j["splits"] = DecimalArray(p.splits());
  j["masses"] = DecimalArray(p.masses());
  return j;
}

absl::StatusOr<PartitionSpec> PartitionFromJson(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kInstanceRecordVersion) {
      return Unreadable("unsupported partition record version");
    }
    absl::StatusOr<ProductDistribution> dist =
        DistributionFromJson(j.at("distribution"));
    if (!dist.ok()) return dist.status();
    absl::StatusOr<double> alpha = ParseExactDecimal(j.at("alpha"));
    absl::StatusOr<std::vector<double>> lo =
        ParseDecimalArray(j.at("support").at("lo"));
    absl::StatusOr<std::vector<double>> hi =
        ParseDecimalArray(j.at("support").at("hi"));
    absl::StatusOr<std::vector<double>> splits =
        ParseDecimalArray(j.at("splits"));
    absl::StatusOr<std::vector<double>> masses =
        ParseDecimalArray(j.at("masses"));
    for (const absl::Status& s : {alpha.status(), lo.status(), hi.status(),
                                  splits.status(), masses.status()}) {
      if (!s.ok()) return s;
    }
    absl::StatusOr<HyperRectangle> support =
        HyperRectangle::Create(*std::move(lo), *std::move(hi));
    if (!support.ok()) return Unreadable("bad support box");
    absl::StatusOr<PartitionSpec> p = PartitionSpec::FromParts(
        *dist, *std::move(support), j.at("depth").get<int>(),
        *std::move(splits), *alpha, j.at("K").get<int64_t>());
    if (!p.ok()) return Unreadable(std::string(p.status().message()));
    if (p->masses() != *masses) {
      return Unreadable("rebuilt cell masses differ from the record");
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    return Unreadable(e.what());
  }
}

nlohmann::json FStarToJson(const FStarInstance& f) {
  nlohmann::json j;
  j["version"] = kInstanceRecordVersion;
  j["partition"] = PartitionToJson(f.partition());
  j["probs"] = {{"gamma", ExactDecimal(f.probs().gamma)},
                {"eps1", ExactDecimal(f.probs().eps1)},
                {"eps2", ExactDecimal(f.probs().eps2)}};
  j["world"] = f.world();
  j["k_index"] = f.k_index();
  j["neg_count"] = f.neg_count();
  nlohmann::json keys = nlohmann::json::array();
  for (uint64_t k : f.label_keys()) keys.push_back(std::to_string(k));
  j["label_keys"] = std::move(keys);
  return j;
}

absl::StatusOr<FStarInstance> FStarFromJson(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != kInstanceRecordVersion) {
      return Unreadable("unsupported f* record version");
    }
    absl::StatusOr<PartitionSpec> partition =
        PartitionFromJson(j.at("partition"));
    if (!partition.ok()) return partition.status();
    absl::StatusOr<double> gamma = ParseExactDecimal(j.at("probs").at("gamma"));
    absl::StatusOr<double> eps1 = ParseExactDecimal(j.at("probs").at("eps1"));
    absl::StatusOr<double> eps2 = ParseExactDecimal(j.at("probs").at("eps2"));
    for (const absl::Status& s :
         {gamma.status(), eps1.status(), eps2.status()}) {
      if (!s.ok()) return s;
    }
    absl::StatusOr<MomentMatchedProbs> probs =
        BuildMomentMatchedProbs(*gamma, *eps1, *eps2);
    if (!probs.ok()) return Unreadable(std::string(probs.status().message()));
    std::vector<uint64_t> keys;
    for (const auto& k : j.at("label_keys")) {
      uint64_t v = 0;
      if (!absl::SimpleAtoi(k.get<std::string>(), &v)) {
        return Unreadable("bad label key");
      }
      keys.push_back(v);
    }
    absl::StatusOr<FStarInstance> f = FStarInstance::Create(
        std::make_shared<const PartitionSpec>(*std::move(partition)),
        std::make_shared<const MomentMatchedProbs>(*std::move(probs)),
        j.at("world").get<int>(), j.at("k_index").get<std::vector<int>>(),
        j.at("neg_count").get<std::vector<int64_t>>(), std::move(keys));
    if (!f.ok()) return Unreadable(std::string(f.status().message()));
    return f;
  } catch (const nlohmann::json::exception& e) {
    return Unreadable(e.what());
  }
}

}  // namespace locaudit

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

#include "locaudit/harness/config.h"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "absl/strings/str_format.h"
#include "locaudit/adversary/serialize.h"
#include "locaudit/auditor/bounds.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

absl::Status Invalid(const std::string& field, const std::string& why) {
  return MakeError(ErrorKind::kConfigInvalid,
                   absl::StrFormat("%s: %s", field, why));
}

// A JSON number or a decimal string.
absl::StatusOr<double> Real(const nlohmann::json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (!s.empty() && end == s.c_str() + s.size() && std::isfinite(v)) {
      return v;
    }
  }
  return Invalid(field, "expected a number or decimal string");
}

absl::StatusOr<std::vector<double>> RealArray(const nlohmann::json& j,
                                              const std::string& field) {
  if (!j.is_array()) return Invalid(field, "expected an array");
  std::vector<double> out;
  for (size_t i = 0; i < j.size(); ++i) {
    absl::StatusOr<double> v = Real(j[i], absl::StrFormat("%s[%d]", field, i));
    if (!v.ok()) return v.status();
    out.push_back(*v);
  }
  return out;
}

absl::StatusOr<int64_t> Integer(const nlohmann::json& j,
                                const std::string& field) {
  if (j.is_number_integer()) return j.get<int64_t>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (!s.empty() && end == s.c_str() + s.size()) return v;
  }
  return Invalid(field, "expected an integer");
}

// "auto" -> nullopt; absent -> nullopt.
absl::StatusOr<std::optional<int64_t>> AutoInteger(const nlohmann::json& j,
                                                   const std::string& field) {
  if (!j.contains(field) || j.at(field) == "auto") {
    return std::optional<int64_t>();
  }
  absl::StatusOr<int64_t> v = Integer(j.at(field), field);
  if (!v.ok()) return v.status();
  return std::optional<int64_t>(*v);
}

template <typename T>
absl::Status ReadReal(const nlohmann::json& j, const std::string& field,
                      T& out) {
  if (!j.contains(field)) return absl::OkStatus();
  absl::StatusOr<double> v = Real(j.at(field), field);
  if (!v.ok()) return v.status();
  out = static_cast<T>(*v);
  return absl::OkStatus();
}

template <typename T>
absl::Status ReadInt(const nlohmann::json& j, const std::string& field,
                     T& out) {
  if (!j.contains(field)) return absl::OkStatus();
  absl::StatusOr<int64_t> v = Integer(j.at(field), field);
  if (!v.ok()) return v.status();
  out = static_cast<T>(*v);
  return absl::OkStatus();
}

bool Open01(double v) { return v > 0.0 && v < 1.0; }

absl::Status CheckAuditorFields(const AuditorConfig& a) {
  if (!Open01(a.eps1)) return Invalid("eps1", "ε₁ in (0, 1)");
  if (!Open01(a.eps2)) return Invalid("eps2", "ε₂ in (0, 1)");
  if (!Open01(a.delta)) return Invalid("delta", "δ in (0, 1)");
  if (!Open01(a.gamma)) return Invalid("gamma", "γ in (0, 1)");
  if (a.gamma * (1.0 + a.eps1) >= 1.0) {
    return Invalid("gamma", "γ(1 + ε₁) < 1");
  }
  return absl::OkStatus();
}

// The hard-instance gates, each tied to its field.
absl::Status CheckHardGates(double gamma, double eps1, double eps2,
                            const std::string& where) {
  const double limit = 1.0 / 48.0;
  if (!(eps1 > 0.0 && eps1 < limit)) {
    return Invalid(where + "eps1",
                   absl::StrFormat("ε₁ < 1/48 violated (eps1 = %g)", eps1));
  }
  if (!(eps2 > 0.0 && eps2 < limit)) {
    return Invalid(where + "eps2",
                   absl::StrFormat("ε₂ < 1/48 violated (eps2 = %g)", eps2));
  }
  if (!(gamma > 0.0 && gamma < 1.0 / 3.0)) {
    return Invalid(where + "gamma",
                   absl::StrFormat("γ < 1/3 violated (gamma = %g)", gamma));
  }
  return absl::OkStatus();
}

const char* const kKindNames[] = {"audit_upper",      "audit_lower",
                                  "moment_check",     "world_separation",
                                  "spheres_scan",     "locality_sweep"};

}  // namespace

absl::string_view ExperimentKindName(ExperimentKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

absl::StatusOr<ExperimentKind> ParseExperimentKind(absl::string_view name) {
  for (int i = 0; i < 6; ++i) {
    if (name == kKindNames[i]) return static_cast<ExperimentKind>(i);
  }
  return Invalid("kind", absl::StrFormat("unknown kind '%s'", name));
}

nlohmann::json DistributionSpec::ToJson() const {
  nlohmann::json j;
  j["kind"] = kind;
  auto decimals = [](const std::vector<double>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : v) a.push_back(ExactDecimal(x));
    return a;
  };
  if (kind == "uniform_box") {
    j["lo"] = decimals(lo);
    j["hi"] = decimals(hi);
  } else if (kind == "gaussian") {
    j["mean"] = decimals(mean);
    j["sd"] = decimals(sd);
  }
  j["dim"] = dim;
  return j;
}

absl::StatusOr<DistributionSpec> ParseDistributionSpec(
    const nlohmann::json& j) {
  if (!j.is_object()) return Invalid("distribution", "expected an object");
  DistributionSpec s;
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) return Invalid("distribution.kind", "string");
    s.kind = j.at("kind").get<std::string>();
  }
  if (absl::Status st = ReadInt(j, "dim", s.dim); !st.ok()) {
    return Invalid("distribution.dim", std::string(st.message()));
  }
  auto arrays = [&](const char* a, const char* b, std::vector<double>& va,
                    std::vector<double>& vb, double da,
                    double db) -> absl::Status {
    if (j.contains(a)) {
      absl::StatusOr<std::vector<double>> v =
          RealArray(j.at(a), std::string("distribution.") + a);
      if (!v.ok()) return v.status();
      va = *v;
    }
    if (j.contains(b)) {
      absl::StatusOr<std::vector<double>> v =
          RealArray(j.at(b), std::string("distribution.") + b);
      if (!v.ok()) return v.status();
      vb = *v;
    }
    if (va.empty() && vb.empty()) {
      va.assign(s.dim, da);
      vb.assign(s.dim, db);
    }
    if (va.size() != vb.size() || va.empty()) {
      return Invalid(std::string("distribution.") + a,
                     absl::StrFormat("%s and %s need equal nonzero length", a,
                                     b));
    }
    s.dim = static_cast<int>(va.size());
    return absl::OkStatus();
  };
  if (s.kind == "uniform_box") {
    if (absl::Status st = arrays("lo", "hi", s.lo, s.hi, 0.0, 1.0); !st.ok()) {
      return st;
    }
    for (int i = 0; i < s.dim; ++i) {
      if (!(s.lo[i] < s.hi[i])) {
        return Invalid(absl::StrFormat("distribution.hi[%d]", i), "lo < hi");
      }
    }
  } else if (s.kind == "gaussian") {
    if (absl::Status st = arrays("mean", "sd", s.mean, s.sd, 0.0, 1.0);
        !st.ok()) {
      return st;
    }
    for (int i = 0; i < s.dim; ++i) {
      if (!(s.sd[i] > 0.0)) {
        return Invalid(absl::StrFormat("distribution.sd[%d]", i), "sd > 0");
      }
    }
  } else if (s.kind == "spheres") {
    if (s.dim < 2) return Invalid("distribution.dim", "spheres need dim >= 2");
  } else {
    return Invalid("distribution.kind",
                   "one of uniform_box, gaussian, spheres");
  }
  return s;
}

absl::StatusOr<ProductDistribution> MakeProductDistribution(
    const DistributionSpec& spec) {
  std::vector<Marginal> marginals;
  for (int i = 0; i < spec.dim; ++i) {
    absl::StatusOr<Marginal> m;
    if (spec.kind == "uniform_box") {
      m = Marginal::Uniform(spec.lo[i], spec.hi[i]);
    } else if (spec.kind == "gaussian") {
      m = Marginal::Gaussian(spec.mean[i], spec.sd[i]);
    } else {
      return Invalid("distribution.kind",
                     "this experiment needs a product distribution");
    }
    if (!m.ok()) return Invalid("distribution", std::string(m.status().message()));
    marginals.push_back(*m);
  }
  return ProductDistribution::Create(std::move(marginals));
}

std::vector<std::array<double, 3>> DefaultMomentGrid() {
  const double gammas[] = {0.005, 0.01, 0.015, 0.02};
  const std::array<double, 2> eps[] = {
      {0.01, 0.01}, {0.005, 0.02}, {0.015, 1.0 / 64.0}, {0.02, 0.005},
      {0.001, 0.02}};
  std::vector<std::array<double, 3>> grid;
  for (double g : gammas) {
    for (const auto& e : eps) grid.push_back({g, e[0], e[1]});
  }
  return grid;
}

absl::StatusOr<ExperimentConfig> ParseConfig(const nlohmann::json& j) {
  if (!j.is_object()) return Invalid("config", "expected a JSON object");
  ExperimentConfig c;
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    return Invalid("kind", "required string");
  }
  absl::StatusOr<ExperimentKind> kind =
      ParseExperimentKind(j.at("kind").get<std::string>());
  if (!kind.ok()) return kind.status();
  c.kind = *kind;

  if (j.contains("distribution")) {
    absl::StatusOr<DistributionSpec> d =
        ParseDistributionSpec(j.at("distribution"));
    if (!d.ok()) return d.status();
    c.distribution = *d;
  } else {
    c.distribution.dim = c.kind == ExperimentKind::kAuditUpper ? 1 : 2;
    c.distribution.lo.assign(c.distribution.dim, 0.0);
    c.distribution.hi.assign(c.distribution.dim, 1.0);
  }

  for (absl::Status s :
       {ReadReal(j, "gamma", c.auditor.gamma), ReadReal(j, "eps1", c.auditor.eps1),
        ReadReal(j, "eps2", c.auditor.eps2), ReadReal(j, "delta", c.auditor.delta),
        ReadReal(j, "lambda", c.lambda), ReadReal(j, "tolerance", c.tolerance),
        ReadReal(j, "delta_c", c.delta_c), ReadReal(j, "slack", c.slack),
        ReadInt(j, "trials", c.trials), ReadInt(j, "master_seed", c.master_seed),
        ReadInt(j, "workers", c.workers), ReadInt(j, "cells", c.cells),
        ReadInt(j, "negative_cells", c.negative_cells),
        ReadInt(j, "coverage_trials", c.coverage_trials),
        ReadInt(j, "collision_trials", c.collision_trials),
        ReadInt(j, "balls", c.balls), ReadInt(j, "fit_points", c.fit_points)}) {
    if (!s.ok()) return s;
  }
  absl::StatusOr<std::optional<int64_t>> K = AutoInteger(j, "K");
  if (!K.ok()) return K.status();
  c.K = *K;
  absl::StatusOr<std::optional<int64_t>> n = AutoInteger(j, "n");
  if (!n.ok()) return n.status();
  c.n = *n;
  if (j.contains("output_dir")) {
    if (!j.at("output_dir").is_string()) return Invalid("output_dir", "string");
    c.output_dir = j.at("output_dir").get<std::string>();
  }
  if (j.contains("auditors")) {
    if (!j.at("auditors").is_array()) return Invalid("auditors", "array");
    for (const auto& a : j.at("auditors")) {
      if (!a.is_string()) return Invalid("auditors", "array of strings");
      c.auditors.push_back(a.get<std::string>());
    }
  }
  if (j.contains("grid") && j.at("grid") != "auto") {
    if (!j.at("grid").is_array()) return Invalid("grid", "array or \"auto\"");
    for (size_t i = 0; i < j.at("grid").size(); ++i) {
      const std::string field = absl::StrFormat("grid[%d]", i);
      const nlohmann::json& e = j.at("grid")[i];
      if (!e.is_object()) return Invalid(field, "expected {gamma, eps1, eps2}");
      std::array<double, 3> t{};
      const char* keys[] = {"gamma", "eps1", "eps2"};
      for (int k = 0; k < 3; ++k) {
        if (!e.contains(keys[k])) return Invalid(field, "missing field");
        absl::StatusOr<double> v = Real(e.at(keys[k]), field + "." + keys[k]);
        if (!v.ok()) return v.status();
        t[k] = *v;
      }
      c.grid.push_back(t);
    }
  }
  if (j.contains("dims")) {
    if (!j.at("dims").is_array()) return Invalid("dims", "array");
    for (const auto& d : j.at("dims")) {
      if (!d.is_number_integer()) return Invalid("dims", "array of integers");
      c.dims.push_back(d.get<int>());
    }
  }
  if (j.contains("lambdas")) {
    absl::StatusOr<std::vector<double>> l = RealArray(j.at("lambdas"), "lambdas");
    if (!l.ok()) return l.status();
    c.lambdas = *l;
  }

  // Kind defaults.
  switch (c.kind) {
    case ExperimentKind::kAuditUpper:
      if (c.auditors.empty()) c.auditors = {"simple_audit"};
      if (c.tolerance == 0.0) c.tolerance = 0.05;
      break;
    case ExperimentKind::kAuditLower:
      if (c.auditors.empty()) c.auditors = {"simple_audit", "constant"};
      if (c.tolerance == 0.0) c.tolerance = 0.1;
      break;
    case ExperimentKind::kMomentCheck:
      if (c.grid.empty()) c.grid = DefaultMomentGrid();
      break;
    case ExperimentKind::kWorldSeparation:
      if (c.tolerance == 0.0) c.tolerance = 0.9;  // minimum event frequency
      break;
    case ExperimentKind::kSpheresScan:
      if (c.dims.empty()) c.dims = {5, 8, 10};
      break;
    case ExperimentKind::kLocalitySweep:
      if (c.lambdas.empty()) {
        for (int e = -8; e <= -5; ++e) {
          for (double mant : {1.0, 2.0, 5.0}) {
            c.lambdas.push_back(mant * std::pow(10.0, e));
          }
        }
      }
      break;
  }
  return c;
}

absl::StatusOr<ExperimentConfig> LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) return Invalid("config", "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) return Invalid("config", "malformed JSON in " + path);
  return ParseConfig(j);
}

absl::Status ValidateConfig(const ExperimentConfig& c) {
  if (c.trials < 0) return Invalid("trials", "trials >= 0");
  if (c.workers < 0) return Invalid("workers", "workers >= 0");
  if (c.n && *c.n < 1) return Invalid("n", "n >= 1");
  if (c.K && *c.K < 1) return Invalid("K", "K >= 1");
  const bool product = c.distribution.kind != "spheres";
  switch (c.kind) {
    case ExperimentKind::kAuditUpper: {
      if (!product) return Invalid("distribution.kind", "product distribution");
      if (absl::Status s = CheckAuditorFields(c.auditor); !s.ok()) return s;
      if (c.cells < 1) return Invalid("cells", "cells >= 1");
      if (c.negative_cells < 0 || c.negative_cells > c.cells) {
        return Invalid("negative_cells", "0 <= negative_cells <= cells");
      }
      if (!(c.lambda > 0.0 && c.lambda <= 1.0 / c.cells)) {
        return Invalid("lambda", "0 < λ <= 1/cells (the locality of the "
                                 "partition explainer)");
      }
      if (c.coverage_trials < 0) {
        return Invalid("coverage_trials", "coverage_trials >= 0");
      }
      return absl::OkStatus();
    }
    case ExperimentKind::kAuditLower:
    case ExperimentKind::kWorldSeparation: {
      if (!product) return Invalid("distribution.kind", "product distribution");
      if (absl::Status s = CheckAuditorFields(c.auditor); !s.ok()) return s;
      if (absl::Status s = CheckHardGates(c.auditor.gamma, c.auditor.eps1,
                                          c.auditor.eps2, "");
          !s.ok()) {
        return s;
      }
      if (!(c.lambda > 0.0 && c.lambda < c.auditor.eps2 * c.auditor.eps2)) {
        return Invalid("lambda", absl::StrFormat(
                                     "λ < ε₂² violated (lambda = %g)", c.lambda));
      }
      if (!Open01(c.delta_c)) return Invalid("delta_c", "δ_c in (0, 1)");
      if (c.collision_trials < 0) {
        return Invalid("collision_trials", "collision_trials >= 0");
      }
      return absl::OkStatus();
    }
    case ExperimentKind::kMomentCheck:
      for (size_t i = 0; i < c.grid.size(); ++i) {
        const auto& t = c.grid[i];
        if (absl::Status s = CheckHardGates(
                t[0], t[1], t[2], absl::StrFormat("grid[%d].", i));
            !s.ok()) {
          return s;
        }
      }
      return absl::OkStatus();
    case ExperimentKind::kSpheresScan:
      for (int d : c.dims) {
        if (d < 2) return Invalid("dims", "d >= 2");
      }
      if (c.balls < 3) return Invalid("balls", "balls >= 3");
      if (!(c.slack >= 0.0 && c.slack < 1.0)) return Invalid("slack", "[0, 1)");
      if (c.fit_points < 10) return Invalid("fit_points", ">= 10");
      return absl::OkStatus();
    case ExperimentKind::kLocalitySweep:
      if (absl::Status s = CheckAuditorFields(c.auditor); !s.ok()) return s;
      for (double l : c.lambdas) {
        if (!(l > 0.0 && l <= 1.0)) return Invalid("lambdas", "λ in (0, 1]");
      }
      return absl::OkStatus();
  }
  return absl::OkStatus();
}

nlohmann::json ExperimentConfig::Echo() const {
  nlohmann::json j;
  j["kind"] = std::string(ExperimentKindName(kind));
  j["distribution"] = distribution.ToJson();
  j["gamma"] = ExactDecimal(auditor.gamma);
  j["eps1"] = ExactDecimal(auditor.eps1);
  j["eps2"] = ExactDecimal(auditor.eps2);
  j["delta"] = ExactDecimal(auditor.delta);
  j["lambda"] = ExactDecimal(lambda);
  j["K"] = K ? nlohmann::json(*K) : nlohmann::json("auto");
  j["n"] = n ? nlohmann::json(*n) : nlohmann::json("auto");
  j["trials"] = trials;
  j["master_seed"] = master_seed;
  j["output_dir"] = output_dir;
  j["tolerance"] = ExactDecimal(tolerance);
  switch (kind) {
    case ExperimentKind::kAuditUpper:
      j["auditors"] = auditors;
      j["cells"] = cells;
      j["negative_cells"] = negative_cells;
      j["coverage_trials"] = coverage_trials;
      break;
    case ExperimentKind::kAuditLower:
      j["auditors"] = auditors;
      j["collision_trials"] = collision_trials;
      j["delta_c"] = ExactDecimal(delta_c);
      break;
    case ExperimentKind::kWorldSeparation:
      j["delta_c"] = ExactDecimal(delta_c);
      break;
    case ExperimentKind::kMomentCheck: {
      nlohmann::json g = nlohmann::json::array();
      for (const auto& t : grid) {
        g.push_back({{"gamma", ExactDecimal(t[0])},
                     {"eps1", ExactDecimal(t[1])},
                     {"eps2", ExactDecimal(t[2])}});
      }
      j["grid"] = std::move(g);
      break;
    }
    case ExperimentKind::kSpheresScan:
      j["dims"] = dims;
      j["balls"] = balls;
      j["slack"] = ExactDecimal(slack);
      j["fit_points"] = fit_points;
      break;
    case ExperimentKind::kLocalitySweep: {
      nlohmann::json l = nlohmann::json::array();
      for (double x : lambdas) l.push_back(ExactDecimal(x));
      j["lambdas"] = std::move(l);
      break;
    }
  }
  return j;
}

}  // namespace locaudit

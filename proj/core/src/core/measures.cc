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

#include "locaudit/core/measures.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

std::optional<double> ExactMass(const Region& region,
                                const DistributionOracle& dist) {
  if (const auto* rect = std::get_if<HyperRectangle>(&region)) {
    return dist.RectMass(*rect);
  }
  return dist.BallMass(std::get<Ball>(region));
}

absl::StatusOr<Point> ExactConditional(const Region& region,
                                       const DistributionOracle& dist,
                                       Rng& rng) {
  if (const auto* rect = std::get_if<HyperRectangle>(&region)) {
    return dist.RectConditionalSample(*rect, rng);
  }
  return dist.BallConditionalSample(std::get<Ball>(region), rng);
}

absl::Status ZeroMass() {
  return MakeError(ErrorKind::kRegionMassZero,
                   "region has zero mass under the distribution");
}

}  // namespace

LossEstimate BinomialEstimate(int64_t hits, int64_t n) {
  LossEstimate e;
  e.samples_used = n;
  if (n <= 0) return e;
  e.value = static_cast<double>(hits) / static_cast<double>(n);
  e.std_error = std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(n));
  return e;
}

absl::StatusOr<Point> SampleInRegion(const Region& region,
                                     const DistributionOracle& dist, Rng& rng,
                                     int64_t max_attempts) {
  if (Dim(region) != dist.dim()) {
    return DimensionMismatchError(absl::StrCat(
        "region dim ", Dim(region), " vs distribution dim ", dist.dim()));
  }
  if (std::optional<double> mass = ExactMass(region, dist);
      mass.has_value() && !(*mass > 0.0)) {
    return ZeroMass();
  }
  absl::StatusOr<Point> exact = ExactConditional(region, dist, rng);
  if (exact.ok() || !absl::IsUnimplemented(exact.status())) return exact;
  for (int64_t attempt = 0; attempt < max_attempts; ++attempt) {
    Point x = dist.Sample(rng);
    if (Contains(region, x)) return x;
  }
  return MakeError(
      ErrorKind::kRegionMassZero,
      absl::StrCat("no rejection sample hit the region in ", max_attempts,
                   " attempts"));
}

absl::StatusOr<LossEstimate> LocalLoss(const LocalExplanation& expl,
                                       const Classifier& f,
                                       const DistributionOracle& dist,
                                       int64_t n_inner, Rng& rng,
                                       int64_t max_attempts) {
  if (n_inner < 1) return ParameterOutOfRangeError("n_inner must be >= 1");
  if (expl.anchor.dim() != dist.dim()) {
    return DimensionMismatchError("anchor dimension vs distribution");
  }
  int64_t disagreements = 0;
  for (int64_t i = 0; i < n_inner; ++i) {
    absl::StatusOr<Point> x = SampleInRegion(expl.region, dist, rng,
                                             max_attempts);
    if (!x.ok()) return x.status();
    if (Predict(expl.local, *x) != f.Classify(*x)) ++disagreements;
  }
  return BinomialEstimate(disagreements, n_inner);
}

LossEstimate ExplainabilityLossFromLosses(std::span<const double> losses,
                                          double gamma) {
  const int64_t hits = std::count_if(
      losses.begin(), losses.end(), [gamma](double l) { return l >= gamma; });
  return BinomialEstimate(hits, static_cast<int64_t>(losses.size()));
}

absl::StatusOr<ExplainabilityResult> ExplainabilityLoss(
    const Explainer& e, const Classifier& f, const DistributionOracle& dist,
    double gamma, int64_t n_outer, int64_t n_inner, Rng& rng,
    int64_t max_attempts) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    return ParameterOutOfRangeError("gamma must lie in (0, 1)");
  }
  if (n_outer < 1) return ParameterOutOfRangeError("n_outer must be >= 1");
  ExplainabilityResult result;
  result.anchor_losses.reserve(n_outer);
  for (int64_t i = 0; i < n_outer; ++i) {
    const Point x = dist.Sample(rng);
    const LocalExplanation expl = e.Explain(f, x);
    absl::StatusOr<LossEstimate> loss =
        LocalLoss(expl, f, dist, n_inner, rng, max_attempts);
    if (loss.ok()) {
      result.anchor_losses.push_back(loss->value);
    } else if (HasErrorKind(loss.status(), ErrorKind::kRegionMassZero)) {
      // An explanation nobody can check is treated as maximally wrong.
      result.anchor_losses.push_back(1.0);
      ++result.zero_mass_anchors;
    } else {
      return absl::Status(
          loss.status().code(),
          absl::StrCat("anchor ", i, ": ", loss.status().message()));
    }
  }
  result.estimate = ExplainabilityLossFromLosses(result.anchor_losses, gamma);
  return result;
}

MassEstimate LocalMass(const Region& region, const DistributionOracle& dist,
                       Rng& rng, int64_t n_mc) {
  MassEstimate out;
  if (Dim(region) != dist.dim()) return out;
  if (std::optional<double> mass = ExactMass(region, dist)) {
    out.value = std::clamp(*mass, 0.0, 1.0);
    out.exact = true;
    return out;
  }
  if (const auto* ball = std::get_if<Ball>(&region);
      ball != nullptr && ball->radius() <= 0.0) {
    out.exact = true;  // a single point under a continuous law
    return out;
  }
  int64_t hits = 0;
  for (int64_t i = 0; i < n_mc; ++i) {
    if (Contains(region, dist.Sample(rng))) ++hits;
  }
  const LossEstimate e = BinomialEstimate(hits, n_mc);
  out.value = e.value;
  out.std_error = e.std_error;
  return out;
}

double Locality(const Explainer& e, const Classifier& f,
                const DistributionOracle& dist, int64_t n_outer, Rng& rng,
                int64_t n_mc) {
  double best = 1.0;
  for (int64_t i = 0; i < n_outer; ++i) {
    const Point x = dist.Sample(rng);
    const LocalExplanation expl = e.Explain(f, x);
    best = std::min(best, LocalMass(expl.region, dist, rng, n_mc).value);
  }
  return best;
}

}  // namespace locaudit

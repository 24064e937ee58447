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

#include "locaudit/distributions/marginal.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_format.h"

namespace locaudit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = 1.41421356237309504880;
// Gaussian quantile searches start inside mean +- kSpan sd; the tail beyond
// carries mass below 1e-300.
constexpr double kSpan = 38.0;

}  // namespace

absl::StatusOr<Marginal> Marginal::Uniform(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("uniform marginal needs finite a < b, got [%g, %g]",
                        a, b));
  }
  return Marginal(Kind::kUniform, a, b);
}

absl::StatusOr<Marginal> Marginal::Gaussian(double mean, double sd) {
  if (!std::isfinite(mean) || !std::isfinite(sd) || !(sd > 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "gaussian marginal needs finite mean and sd > 0, got (%g, %g)", mean,
        sd));
  }
  return Marginal(Kind::kGaussian, mean, sd);
}

double Marginal::Cdf(double x) const {
  if (kind_ == Kind::kUniform) {
    if (x <= p0_) return 0.0;
    if (x >= p1_) return 1.0;
    return (x - p0_) / (p1_ - p0_);
  }
  return 0.5 * std::erfc(-(x - p0_) / (p1_ * kSqrt2));
}

double Marginal::Survival(double x) const {
  if (kind_ == Kind::kUniform) {
    if (x <= p0_) return 1.0;
    if (x >= p1_) return 0.0;
    return (p1_ - x) / (p1_ - p0_);
  }
  return 0.5 * std::erfc((x - p0_) / (p1_ * kSqrt2));
}

double Marginal::IntervalMass(double a, double b) const {
  if (!(a < b)) return 0.0;
  if (kind_ == Kind::kUniform) {
    const double lo = std::max(a, p0_);
    const double hi = std::min(b, p1_);
    return hi > lo ? (hi - lo) / (p1_ - p0_) : 0.0;
  }
  if (a >= p0_) return std::max(0.0, Survival(a) - Survival(b));
  if (b <= p0_) return std::max(0.0, Cdf(b) - Cdf(a));
  return std::max(0.0, 1.0 - Cdf(a) - Survival(b));
}

double Marginal::support_lo() const {
  return kind_ == Kind::kUniform ? p0_ : -kInf;
}

double Marginal::support_hi() const {
  return kind_ == Kind::kUniform ? p1_ : kInf;
}

std::pair<double, double> Marginal::ClippedSupport(double tail) const {
  if (kind_ == Kind::kUniform) return {p0_, p1_};
  // Symmetric: the upper clip is the mirror of the lower one.
  const double lo = IntervalQuantile(-kInf, kInf, tail);
  return {lo, 2.0 * p0_ - lo};
}

double Marginal::IntervalQuantile(double a, double b, double frac) const {
  frac = std::clamp(frac, 0.0, 1.0);
  if (kind_ == Kind::kUniform) {
    const double lo = std::max(a, p0_);
    const double hi = std::min(b, p1_);
    if (frac <= 0.0) return lo;
    if (frac >= 1.0) return hi;
    return std::clamp(lo + frac * (hi - lo), lo, hi);
  }
  double lo = std::isfinite(a) ? a : p0_ - kSpan * p1_;
  double hi = std::isfinite(b) ? b : p0_ + kSpan * p1_;
  if (frac <= 0.0) return lo;
  if (frac >= 1.0) return hi;
  const double total = IntervalMass(a, b);
  const double target = frac * total;
  // Compare on whichever side of the split keeps relative precision.
  const bool from_left = frac <= 0.5;
  const double goal = from_left ? target : total - target;
  for (int iter = 0; iter < 4096; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const bool below = from_left ? IntervalMass(a, mid) < goal
                                 : IntervalMass(mid, b) > goal;
    if (below) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + 0.5 * (hi - lo);
}

double Marginal::Quantile(double u) const {
  return IntervalQuantile(-kInf, kInf, u);
}

double Marginal::Sample(Rng& rng) const {
  if (kind_ == Kind::kUniform) {
    return p0_ + (p1_ - p0_) * UniformOpen01(rng);
  }
  return p0_ + p1_ * StandardNormal(rng);
}

double Marginal::TruncatedSample(double a, double b, Rng& rng) const {
  double x = IntervalQuantile(a, b, UniformOpen01(rng));
  // Keep the half-open convention a < x <= b.
  if (x <= a) x = std::nextafter(a, kInf);
  if (x > b) x = b;
  return x;
}

std::string Marginal::DebugString() const {
  if (kind_ == Kind::kUniform) {
    return absl::StrFormat("Uniform[%g, %g]", p0_, p1_);
  }
  return absl::StrFormat("Gaussian(%g, %g)", p0_, p1_);
}

}  // namespace locaudit

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

#include "locaudit/adversary/moment_matching.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"
#include "boost/multiprecision/cpp_bin_float.hpp"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

HighPrecision HighPowerSum(const std::vector<double>& xs, int t) {
  HighPrecision sum = 0;
  for (double x : xs) sum += boost::multiprecision::pow(HighPrecision(x), t);
  return sum;
}

absl::Status Rejected(const std::string& what) {
  return MakeError(ErrorKind::kConstructionRejected, what);
}

}  // namespace

int MomentMatchingL(double eps1, double eps2) {
  const double v = 1.0 / (8.0 * std::max(2.0 * eps1, eps2));
  return static_cast<int>(std::ceil(v)) - 1;
}

std::vector<double> POffsets(int l) {
  std::vector<double> out;
  out.reserve(4 * l);
  for (int o = 4 * l - 1; o >= 1; o -= 2) out.push_back(-o);
  for (int o = 1; o <= 4 * l - 1; o += 2) out.push_back(o);
  return out;
}

int QSign(int l, double x) {
  // P_l(x) = prod (x^2 - o^2); P_l(0) = prod o^2 > 0.
  int sign = 1;
  long double log_p = 0.0L, log_p0 = 0.0L;
  const long double xx = static_cast<long double>(x) * x;
  for (int o = 1; o <= 4 * l - 1; o += 2) {
    const long double f = xx - static_cast<long double>(o) * o;
    if (f == 0.0L) return -1;  // P_l(x) = 0 < P_l(0)
    if (f < 0.0L) sign = -sign;
    log_p += std::log(std::fabs(f));
    log_p0 += 2.0L * std::log(static_cast<long double>(o));
  }
  if (sign < 0) return -1;
  const long double diff = log_p - log_p0;
  if (std::fabs(diff) > 1e-12L) return diff > 0 ? 1 : -1;
  // Too close to call in log space: redo the products with 50 digits.
  HighPrecision p = 1, p0 = 1;
  const HighPrecision hx(x);
  for (int o = 1; o <= 4 * l - 1; o += 2) {
    p *= hx * hx - o * o;
    p0 *= HighPrecision(o) * o;
  }
  if (p > p0) return 1;
  if (p < p0) return -1;
  return 0;
}

absl::StatusOr<std::vector<double>> QOffsets(int l, double tol) {
  if (l < 1) return ParameterOutOfRangeError("l must be >= 1");
  std::vector<std::pair<double, double>> brackets;
  for (int i = 1; i <= l - 1; ++i) {
    brackets.push_back({4.0 * i - 1, 4.0 * i});
    brackets.push_back({4.0 * i, 4.0 * i + 1});
  }
  brackets.push_back({4.0 * l - 1, 4.0 * l});

  std::vector<double> positive;
  for (auto [lo, hi] : brackets) {
    int s_lo = QSign(l, lo), s_hi = QSign(l, hi);
    if (s_lo == 0) { positive.push_back(lo); continue; }
    if (s_hi == 0) { positive.push_back(hi); continue; }
    if (s_lo == s_hi) {
      return Rejected(absl::StrFormat(
          "Q_%d has no sign change on (%g, %g)", l, lo, hi));
    }
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const int s = QSign(l, mid);
      if (s == 0) { lo = hi = mid; break; }
      if (s == s_lo) lo = mid; else hi = mid;
    }
    positive.push_back(0.5 * (lo + hi));
  }
  std::vector<double> roots;
  roots.reserve(4 * l);
  for (double r : positive) roots.push_back(-r);
  roots.push_back(0.0);
  roots.push_back(0.0);
  for (double r : positive) roots.push_back(r);
  std::sort(roots.begin(), roots.end());
  return roots;
}

long double PowerSum(const std::vector<double>& xs, int t) {
  return HighPowerSum(xs, t).convert_to<long double>();
}

double MomentMatchedProbs::RelativeResidual(int t) const {
  const HighPrecision sp = HighPowerSum(p, t);
  const HighPrecision sq = HighPowerSum(q, t);
  const HighPrecision denom = sp > 1 ? sp : HighPrecision(1);
  return (boost::multiprecision::abs(sp - sq) / denom).convert_to<double>();
}

absl::Status MomentMatchedProbs::CheckPowerSums(double rel_tol) const {
  for (int t = 0; t <= 2 * m - 1; ++t) {
    const double r = RelativeResidual(t);
    if (!(r <= rel_tol)) {
      return Rejected(absl::StrFormat(
          "power sums differ at t = %d (relative %.3g > %.3g)", t, r,
          rel_tol));
    }
  }
  return absl::OkStatus();
}

absl::Status MomentMatchedProbs::CheckSeparation() const {
  const double below = gamma * (1.0 - 2.0 * eps1);
  const double above = gamma * (1.0 + 2.0 * eps1);
  if (!(std::is_sorted(p.begin(), p.end()) && p[m - 1] < below &&
        below < above && above < p[m])) {
    return Rejected(absl::StrFormat(
        "p_m = %.17g, p_{m+1} = %.17g do not straddle [%.17g, %.17g]",
        p[m - 1], p[m], below, above));
  }
  return absl::OkStatus();
}

absl::Status MomentMatchedProbs::CheckDoubleRoot(double tol) const {
  const double c = gamma * (1.0 + 2.0 * eps1);
  if (!std::is_sorted(q.begin(), q.end()) ||
      std::fabs(q[m - 1] - c) > tol || std::fabs(q[m] - c) > tol ||
      !(q[m - 2] < q[m - 1]) || !(q[m] < q[m + 1])) {
    return Rejected(absl::StrFormat(
        "q_m = %.17g, q_{m+1} = %.17g, expected the double value %.17g",
        q[m - 1], q[m], c));
  }
  return absl::OkStatus();
}

absl::Status MomentMatchedProbs::CheckOrderRange() const {
  const double upper = 1.0 / (4.0 * eps2);
  const double lower = 1.0 / (8.0 * std::max(2.0 * eps1, eps2)) + 1.0;
  if (!(upper >= m && m >= lower)) {
    return Rejected(absl::StrFormat(
        "m = %d outside [%.17g, %.17g]", m, lower, upper));
  }
  return absl::OkStatus();
}

absl::Status MomentMatchedProbs::CheckRange() const {
  for (const auto* v : {&p, &q}) {
    for (double x : *v) {
      if (!(x >= 0.0 && x <= 1.0)) {
        return Rejected(absl::StrFormat("probability %.17g outside [0, 1]",
                                        x));
      }
    }
  }
  return absl::OkStatus();
}

bool GammaNeedsWarning(double gamma) {
  return gamma >= 1.0 / 48.0 && gamma < 1.0 / 3.0;
}

absl::StatusOr<MomentMatchedProbs> BuildMomentMatchedProbs(double gamma,
                                                           double eps1,
                                                           double eps2) {
  if (!(eps1 > 0.0 && eps1 < 1.0 / 48.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("ε₁ < 1/48 violated (eps1 = %g)", eps1));
  }
  if (!(eps2 > 0.0 && eps2 < 1.0 / 48.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("ε₂ < 1/48 violated (eps2 = %g)", eps2));
  }
  if (!(gamma > 0.0 && gamma < 1.0 / 3.0)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("γ < 1/3 violated (gamma = %g)", gamma));
  }
  MomentMatchedProbs out;
  out.gamma = gamma;
  out.eps1 = eps1;
  out.eps2 = eps2;
  out.l = MomentMatchingL(eps1, eps2);
  out.m = 2 * out.l;
  out.eps = 1.0 / (8.0 * out.l);
  out.center = gamma * (1.0 + 2.0 * eps1);
  out.scale = 2.0 * gamma * out.eps;
  out.p_offsets = POffsets(out.l);
  absl::StatusOr<std::vector<double>> q_offsets = QOffsets(out.l);
  if (!q_offsets.ok()) return q_offsets.status();
  out.q_offsets = *std::move(q_offsets);
  for (double o : out.p_offsets) out.p.push_back(out.center + out.scale * o);
  for (double o : out.q_offsets) out.q.push_back(out.center + out.scale * o);
  for (absl::Status s : {out.CheckRange(), out.CheckSeparation(),
                         out.CheckDoubleRoot(), out.CheckPowerSums(),
                         out.CheckOrderRange()}) {
    if (!s.ok()) return s;
  }
  return out;
}

}  // namespace locaudit

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

#include <cmath>
#include <vector>

#include "boost/multiprecision/cpp_bin_float.hpp"
#include "boost/multiprecision/cpp_int.hpp"
#include "gtest/gtest.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/core/errors.h"
#include "locaudit/harness/config.h"

namespace locaudit {
namespace {

using Big = boost::multiprecision::cpp_bin_float_100;
using boost::multiprecision::cpp_int;

// Coefficients of P_l(x) = prod_{o odd <= 4l-1} (x^2 - o^2), exact integers,
// lowest degree first.
std::vector<cpp_int> PCoefficients(int l) {
  std::vector<cpp_int> c = {1};
  for (int o = 1; o <= 4 * l - 1; o += 2) {
    std::vector<cpp_int> next(c.size() + 2, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 2] += c[i];
      next[i] -= c[i] * o * o;
    }
    c = std::move(next);
  }
  return c;
}

Big Eval(const std::vector<cpp_int>& c, const Big& x) {
  Big acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + Big(c[i]);
  return acc;
}

Big BigPowerSum(const std::vector<double>& xs, int t) {
  Big s = 0;
  for (double x : xs) s += boost::multiprecision::pow(Big(x), t);
  return s;
}

TEST(MomentMatchingTest, LFromTolerances) {
  EXPECT_EQ(MomentMatchingL(0.01, 0.01), 6);
  EXPECT_EQ(MomentMatchingL(0.015, 1.0 / 64.0), 4);
  EXPECT_EQ(MomentMatchingL(0.02, 0.005), 3);
}

// Q_1(x) = x^4 - 10 x^2.
TEST(MomentMatchingTest, ClosedFormL1) {
  auto q = QOffsets(1);
  ASSERT_TRUE(q.ok());
  ASSERT_EQ(q->size(), 4u);
  const double r = std::sqrt(10.0);
  EXPECT_NEAR((*q)[0], -r, 1e-12);
  EXPECT_NEAR((*q)[1], 0.0, 1e-12);
  EXPECT_NEAR((*q)[2], 0.0, 1e-12);
  EXPECT_NEAR((*q)[3], r, 1e-12);
  EXPECT_EQ(POffsets(1), (std::vector<double>{-3, -1, 1, 3}));
  const double want_p[] = {4, 0, 20, 0, 164};
  const double want_q[] = {4, 0, 20, 0, 200};
  for (int t = 0; t <= 4; ++t) {
    EXPECT_NEAR(static_cast<double>(PowerSum(POffsets(1), t)), want_p[t],
                1e-12);
    EXPECT_NEAR(static_cast<double>(PowerSum(*q, t)), want_q[t], 1e-9);
  }
}

TEST(MomentMatchingTest, QRootsAreRootsOfTheExactPolynomial) {
  for (int l = 1; l <= 8; ++l) {
    std::vector<cpp_int> c = PCoefficients(l);
    const cpp_int p0 = c[0];
    c[0] = 0;  // Q_l = P_l - P_l(0)
    auto q = QOffsets(l);
    ASSERT_TRUE(q.ok()) << l;
    ASSERT_EQ(static_cast<int>(q->size()), 4 * l);
    for (double x : *q) {
      if (x == 0.0) continue;
      // Scale by the derivative size: bisection stops at 1e-13 in x.
      Big deriv = 0;
      for (size_t i = 1; i < c.size(); ++i) {
        deriv += Big(c[i]) * i * boost::multiprecision::pow(Big(x), i - 1);
      }
      const Big residual = abs(Eval(c, Big(x))) / abs(deriv);
      EXPECT_LT(static_cast<double>(residual), 1e-12) << "l=" << l << " x=" << x;
    }
    EXPECT_NE(p0, 0);
  }
}

TEST(MomentMatchingTest, SignMatchesExactPolynomial) {
  for (int l = 1; l <= 6; ++l) {
    std::vector<cpp_int> c = PCoefficients(l);
    c[0] = 0;
    for (double x : {0.5, 1.7, 2.2, 3.9, 5.5, 7.1, 10.3, -4.4}) {
      const Big v = Eval(c, Big(x));
      const int want = v > 0 ? 1 : (v < 0 ? -1 : 0);
      EXPECT_EQ(QSign(l, x), want) << "l=" << l << " x=" << x;
    }
  }
}

// gamma = 0.1, eps1 = eps2 = 0.01: l = 6, eps = 1/48, m = 12, p_m below
// gamma (1 - 2 eps1).
TEST(MomentMatchingTest, ExampleTriple) {
  auto p = BuildMomentMatchedProbs(0.1, 0.01, 0.01);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->l, 6);
  EXPECT_EQ(p->m, 12);
  EXPECT_DOUBLE_EQ(p->eps, 1.0 / 48.0);
  EXPECT_EQ(p->p.size(), 24u);
  EXPECT_EQ(p->q.size(), 24u);
  EXPECT_NEAR(p->p[p->m - 1], 0.102 - 0.2 / 48.0, 1e-15);
  EXPECT_LT(p->p[p->m - 1], 0.1 * (1 - 2 * 0.01));
}

// Power sums recomputed here in 100-digit arithmetic from the returned
// lists, independent of the library's own residual routine.
TEST(MomentMatchingTest, PowerSumsAgreeBelowTwoMOnDefaultGrid) {
  for (const auto& t : DefaultMomentGrid()) {
    auto p = BuildMomentMatchedProbs(t[0], t[1], t[2]);
    ASSERT_TRUE(p.ok()) << t[0] << " " << t[1] << " " << t[2];
    for (int s = 0; s < 2 * p->m; ++s) {
      const Big a = BigPowerSum(p->p, s);
      const Big b = BigPowerSum(p->q, s);
      const Big rel = abs(a - b) / (a > 1 ? a : Big(1));
      EXPECT_LE(static_cast<double>(rel), 1e-9) << "t=" << s;
      EXPECT_NEAR(static_cast<double>(rel), p->RelativeResidual(s), 1e-20);
    }
    EXPECT_GT(p->RelativeResidual(2 * p->m), 0.0);
    EXPECT_TRUE(p->CheckSeparation().ok());
    EXPECT_TRUE(p->CheckDoubleRoot().ok());
    EXPECT_TRUE(p->CheckOrderRange().ok());
    EXPECT_TRUE(p->CheckRange().ok());
  }
}

// The t = 2m gap is s^{4l} 4l P_l(0): tiny in probability space.
TEST(MomentMatchingTest, GapAtTwoMHasClosedForm) {
  auto p = BuildMomentMatchedProbs(0.02, 0.015, 1.0 / 64.0);
  ASSERT_TRUE(p.ok());
  const int l = p->l;
  const cpp_int p0 = PCoefficients(l)[0];
  const Big gap = boost::multiprecision::pow(Big(p->scale), 4 * l) * 4 * l *
                  abs(Big(p0));
  const Big diff = abs(BigPowerSum(p->p, 2 * p->m) - BigPowerSum(p->q, 2 * p->m));
  // Rounding p, q to double perturbs the sums by ~1e-16 of their size,
  // about 1e-4 of the gap.
  EXPECT_NEAR(static_cast<double>(diff / gap), 1.0, 1e-3);
}

TEST(MomentMatchingTest, Gates) {
  auto bad1 = BuildMomentMatchedProbs(0.1, 1.0 / 48.0, 0.01);
  EXPECT_TRUE(HasErrorKind(bad1.status(), ErrorKind::kParameterOutOfRange));
  EXPECT_NE(bad1.status().message().find("ε₁ < 1/48"), std::string::npos);
  auto bad2 = BuildMomentMatchedProbs(0.1, 0.01, 0.03);
  EXPECT_NE(bad2.status().message().find("ε₂ < 1/48"), std::string::npos);
  auto bad3 = BuildMomentMatchedProbs(0.34, 0.01, 0.01);
  EXPECT_NE(bad3.status().message().find("γ < 1/3"), std::string::npos);
  EXPECT_TRUE(GammaNeedsWarning(0.1));
  EXPECT_FALSE(GammaNeedsWarning(0.01));
}

}  // namespace
}  // namespace locaudit

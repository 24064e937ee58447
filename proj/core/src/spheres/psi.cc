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

#include "locaudit/spheres/psi.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "boost/math/quadrature/gauss_kronrod.hpp"
#include "boost/math/special_functions/beta.hpp"

namespace locaudit {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-14;

// Integral of sin^{d-2} over [0, theta], written as theta^{d-1} times an O(1)
// integral over [0, 1]. Without the rescaling the adaptive rule cannot meet a
// relative tolerance on tiny caps and recurses to full depth.
double Integrate(double theta, int d) {
  if (!(theta > 0.0)) return 0.0;
  const int power = d - 2;
  auto f = [theta, power](double u) {
    return std::pow(std::sin(theta * u) / theta, power);
  };
  return std::pow(theta, d - 1) *
         boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
             f, 0.0, 1.0, /*max_depth=*/20, kTol);
}

}  // namespace

double CapIntegral(double theta, int d) {
  theta = std::clamp(theta, 0.0, kPi);
  if (d == 2) return theta;
  return Integrate(theta, d);
}

double Psi(double theta, int d) {
  theta = std::clamp(theta, 0.0, kPi);
  if (theta <= 0.0) return 0.0;
  if (theta >= kPi) return 1.0;
  // Integrate the shorter side so the result keeps relative precision for
  // small caps and for caps that nearly cover the sphere.
  const double total = CapIntegral(kPi, d);
  if (theta <= 0.5 * kPi) return CapIntegral(theta, d) / total;
  return 1.0 - Integrate(kPi - theta, d) / total;  // sin is symmetric
}

double PsiRatio(double c, double theta, int d) {
  const double den = CapIntegral(theta, d);
  if (!(den > 0.0)) return 0.0;
  return CapIntegral(c * theta, d) / den;
}

double PsiIncompleteBeta(double theta, int d) {
  theta = std::clamp(theta, 0.0, kPi);
  const double a = 0.5 * (d - 1);
  const double s = std::sin(theta);
  const double half = 0.5 * boost::math::ibeta(a, 0.5, s * s);
  return theta <= 0.5 * kPi ? half : 1.0 - half;
}

double PsiInverse(double t, int d) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return kPi;
  const double a = 0.5 * (d - 1);
  if (t <= 0.5) {
    const double x = boost::math::ibeta_inv(a, 0.5, 2.0 * t);
    return std::asin(std::sqrt(x));
  }
  const double x = boost::math::ibeta_inv(a, 0.5, 2.0 * (1.0 - t));
  return kPi - std::asin(std::sqrt(x));
}

}  // namespace locaudit

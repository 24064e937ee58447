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

#include "locaudit/spheres/caps.h"

#include <cmath>
#include <numbers>

#include "locaudit/core/errors.h"
#include "locaudit/distributions/sphere_sampling.h"
#include "locaudit/spheres/psi.h"

namespace locaudit {
namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

double CapAngle(double s, double a_norm, double r) {
  if (a_norm <= 0.0) return s <= r ? kPi : 0.0;
  // cos(theta) = h = (s^2 + a^2 - r^2) / (2 s a). Work with 1 - h and 1 + h,
  // factored, so angles near 0 and pi keep their precision.
  const double denom = 2.0 * s * a_norm;
  const double one_minus_h = (r - (s - a_norm)) * (r + (s - a_norm)) / denom;
  const double one_plus_h = ((s + a_norm) - r) * ((s + a_norm) + r) / denom;
  if (one_minus_h <= 0.0) return 0.0;
  if (one_plus_h <= 0.0) return kPi;
  if (one_minus_h <= 1.0) {
    return 2.0 * std::asin(std::sqrt(0.5 * one_minus_h));
  }
  return kPi - 2.0 * std::asin(std::sqrt(0.5 * one_plus_h));
}

CapDecomposition DecomposeBall(const std::array<double, 3>& radii,
                               const Ball& ball) {
  CapDecomposition out;
  out.dim = ball.dim();
  const double a_norm = ball.center().Norm();
  out.axis.assign(out.dim, 0.0);
  if (a_norm > 0.0) {
    for (int i = 0; i < out.dim; ++i) out.axis[i] = ball.center()[i] / a_norm;
  } else {
    out.axis[0] = 1.0;
  }
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    out.theta[i] = CapAngle(radii[i], a_norm, ball.radius());
    out.cap_fraction[i] = Psi(out.theta[i], out.dim);
    total += out.cap_fraction[i];
  }
  out.mass = total / 3.0;
  return out;
}

absl::StatusOr<Point> SampleInBall(const std::array<double, 3>& radii,
                                   const CapDecomposition& caps, Rng& rng,
                                   int* sphere) {
  const double total =
      caps.cap_fraction[0] + caps.cap_fraction[1] + caps.cap_fraction[2];
  if (!(total > 0.0)) {
    return MakeError(ErrorKind::kZeroMassBall,
                     "ball does not meet any of the spheres");
  }
  double u = Uniform01(rng) * total;
  int i = 0;
  while (i < 2 && (u >= caps.cap_fraction[i] || caps.cap_fraction[i] <= 0.0)) {
    u -= caps.cap_fraction[i];
    ++i;
  }
  while (caps.cap_fraction[i] <= 0.0) --i;  // rounding at the top end
  if (sphere != nullptr) *sphere = i;

  const int d = caps.dim;
  const double s = radii[i];
  const double phi =
      PsiInverse(UniformOpen01(rng) * caps.cap_fraction[i], d);
  const double cos_phi = std::cos(phi);
  const double sin_phi = std::sin(phi);
  std::vector<double> v = SampleOrthogonalUnit(caps.axis, rng);
  std::vector<double> x(d);
  for (int k = 0; k < d; ++k) {
    x[k] = s * (cos_phi * caps.axis[k] + sin_phi * v[k]);
  }
  return Point(std::move(x));
}

}  // namespace locaudit

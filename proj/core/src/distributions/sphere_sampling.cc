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

#include "locaudit/distributions/sphere_sampling.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

// Rescales v to unit length; redraws are the caller's job when v is ~0.
bool Normalize(std::vector<double>& v) {
  double n2 = 0.0;
  for (double c : v) n2 += c * c;
  if (!(n2 > 1e-200)) return false;
  const double inv = 1.0 / std::sqrt(n2);
  for (double& c : v) c *= inv;
  return true;
}

}  // namespace

absl::StatusOr<Point> SampleUniformSphere(int d, double radius, Rng& rng) {
  if (d < 1) return ParameterOutOfRangeError("sphere dimension must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    return ParameterOutOfRangeError(
        absl::StrFormat("sphere radius must be positive, got %g", radius));
  }
  std::vector<double> x(d);
  do {
    for (double& c : x) c = StandardNormal(rng);
  } while (!Normalize(x));
  for (double& c : x) c *= radius;
  return Point(std::move(x));
}

std::vector<double> SampleOrthogonalUnit(std::span<const double> axis,
                                         Rng& rng) {
  std::vector<double> v(axis.size());
  while (true) {
    for (double& c : v) c = StandardNormal(rng);
    const double proj = Dot(v, axis);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= proj * axis[i];
    // A second pass removes the residual component left by rounding.
    const double proj2 = Dot(v, axis);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= proj2 * axis[i];
    if (Normalize(v)) return v;
  }
}

}  // namespace locaudit

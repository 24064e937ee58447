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

// A ball meets each origin-centered sphere in a spherical cap around the
// direction of the ball's center. These helpers compute the cap angles, the
// exact ball mass under the three-sphere mixture, and exact conditional
// samples inside the ball.

#ifndef LOCAUDIT_SPHERES_CAPS_H_
#define LOCAUDIT_SPHERES_CAPS_H_

#include <array>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/core/geometry.h"
#include "locaudit/core/random.h"

namespace locaudit {

struct CapDecomposition {
  int dim = 0;
  // Unit vector from the origin toward the ball center (e_1 when the center
  // is the origin, where every cap is all-or-nothing).
  std::vector<double> axis;
  std::array<double, 3> theta = {0.0, 0.0, 0.0};
  // Psi(theta_i) per sphere.
  std::array<double, 3> cap_fraction = {0.0, 0.0, 0.0};
  // Equal-weight mixture mass: sum(cap_fraction) / 3.
  double mass = 0.0;
};

// Half-angle of the cap {x : |x| = s, |x - a| <= r} around a / |a|, where
// a_norm = |a|. 0 means no intersection (or a single point), pi means the
// whole sphere lies inside the ball.
double CapAngle(double s, double a_norm, double r);

CapDecomposition DecomposeBall(const std::array<double, 3>& radii,
                               const Ball& ball);

// Exact draw from the mixture conditioned on the ball: sphere chosen in
// proportion to its cap fraction, polar angle by inverse CDF, then a uniform
// direction in the orthogonal complement of the axis. Sets *sphere if given.
absl::StatusOr<Point> SampleInBall(const std::array<double, 3>& radii,
                                   const CapDecomposition& caps, Rng& rng,
                                   int* sphere = nullptr);

}  // namespace locaudit

#endif  // LOCAUDIT_SPHERES_CAPS_H_

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

#ifndef LOCAUDIT_DISTRIBUTIONS_SPHERE_SAMPLING_H_
#define LOCAUDIT_DISTRIBUTIONS_SPHERE_SAMPLING_H_

#include <span>

#include "absl/status/statusor.h"
#include "locaudit/core/geometry.h"
#include "locaudit/core/random.h"

namespace locaudit {

// Uniform point on the sphere of the given radius centered at the origin
// (normalized Gaussian vector). d >= 1, radius > 0.
absl::StatusOr<Point> SampleUniformSphere(int d, double radius, Rng& rng);

// Uniform unit vector orthogonal to the unit vector `axis`; d >= 2.
std::vector<double> SampleOrthogonalUnit(std::span<const double> axis,
                                         Rng& rng);

}  // namespace locaudit

#endif  // LOCAUDIT_DISTRIBUTIONS_SPHERE_SAMPLING_H_

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

#ifndef LOCAUDIT_SPHERES_INSTANCE_H_
#define LOCAUDIT_SPHERES_INSTANCE_H_

#include "absl/status/statusor.h"
#include "locaudit/core/classifiers.h"
#include "locaudit/distributions/spheres_distribution.h"

namespace locaudit {

// The radial labelling of the three spheres: inner +1, middle -1, outer +1,
// with boundaries at |x|^2 = 1 - alpha/2 and 1 + beta/2.
class SpheresClassifier final : public Classifier {
 public:
  SpheresClassifier(double alpha, double beta) : alpha_(alpha), beta_(beta) {}
  Label Classify(const Point& x) const override;

 private:
  double alpha_;
  double beta_;
};

struct SpheresInstance {
  static absl::StatusOr<SpheresInstance> Create(int d);

  int d() const { return dist.dim(); }
  double alpha() const { return dist.alpha(); }
  double beta() const { return dist.beta(); }
  // 3^{1-d}: balls lighter than this are exempt from the loss bound.
  double MassThreshold() const;

  SpheresDistribution dist;
  SpheresClassifier f;
  Point x_star;  // (1 + beta) e_1, on the outer sphere
};

Label FSpheres(const SpheresInstance& instance, const Point& x);

}  // namespace locaudit

#endif  // LOCAUDIT_SPHERES_INSTANCE_H_

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

// Searches for the linear classifier with the smallest 0-1 loss against the
// radial labelling inside a ball. The search is heuristic, so the reported
// loss bounds the true minimum from above.

#ifndef LOCAUDIT_SPHERES_LINEAR_FIT_H_
#define LOCAUDIT_SPHERES_LINEAR_FIT_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/core/classifiers.h"
#include "locaudit/core/random.h"
#include "locaudit/spheres/caps.h"
#include "locaudit/spheres/instance.h"

namespace locaudit {

struct LinearFitOptions {
  int n_points = 4000;
  int restarts = 4;
  int iterations = 150;
};

struct LinearFitResult {
  // 0-1 loss of `classifier` on a fresh sample independent of the search.
  double loss = 0.0;
  // 0-1 loss on the search sample.
  double train_loss = 0.0;
  // Best train loss inside the axis-threshold family alone.
  double axis_loss = 0.0;
  LinearClassifier classifier = *LinearClassifier::Create({1.0}, 0.0);
  CapDecomposition caps;
};

// Labelled sample used by the search.
struct LabelledSample {
  std::vector<Point> x;
  std::vector<Label> y;
};

// Exact best threshold along `direction` (both orientations, including the
// two constant-acting thresholds). Returns (loss count, classifier).
std::pair<int64_t, LinearClassifier> BestAxisThreshold(
    const LabelledSample& sample, std::span<const double> direction);

// 0-1 error count of g on the sample.
int64_t ZeroOneErrors(const LabelledSample& sample, const LinearClassifier& g);

absl::StatusOr<LinearFitResult> BestLinearLoss(const SpheresInstance& instance,
                                               const Ball& ball,
                                               const LinearFitOptions& options,
                                               Rng& rng);

}  // namespace locaudit

#endif  // LOCAUDIT_SPHERES_LINEAR_FIT_H_

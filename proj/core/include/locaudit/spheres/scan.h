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

// Locality/loss dichotomy scan over balls containing x*: each ball must be
// lighter than 3^{1-d} or force linear loss of at least 1/6 (minus slack).

#ifndef LOCAUDIT_SPHERES_SCAN_H_
#define LOCAUDIT_SPHERES_SCAN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/core/geometry.h"
#include "locaudit/spheres/instance.h"
#include "locaudit/spheres/linear_fit.h"

namespace locaudit {

enum class BallKind { kAllSpace, kPoint, kTiny, kRandom };

absl::string_view BallKindName(BallKind kind);

struct ScanOptions {
  int balls = 50;  // including the three fixed balls
  double slack = 0.02;
  LinearFitOptions fit;
  // The all-space ball gets a larger sample; it carries the 1/3 check.
  int all_space_points = 20000;
  uint64_t seed = 1;
  int workers = 1;
};

struct ScanRow {
  int d = 0;
  BallKind kind = BallKind::kRandom;
  double center_norm = 0.0;
  double radius = 0.0;
  std::array<double, 3> theta = {0.0, 0.0, 0.0};
  double mass = 0.0;
  double mass_threshold = 0.0;
  // Empty sample (mass 0) reports loss 0 and is exempt by mass.
  double best_loss = 0.0;
  double train_loss = 0.0;
  bool pass = false;
};

struct ScanReport {
  int d = 0;
  double slack = 0.0;
  double mass_threshold = 0.0;
  // Psi(pi/3) next to 3^{1-d}; reported, not asserted.
  double psi_pi_over_3 = 0.0;
  std::vector<ScanRow> rows;

  bool AllPass() const;
  // A ball with loss < 0.01 and mass below the threshold exists.
  bool HasSmallExactBall() const;
  // Loss of the all-space ball (or -1 when absent).
  double AllSpaceLoss() const;
};

// The list of balls scanned for `instance`; deterministic in `seed`.
std::vector<std::pair<BallKind, Ball>> ScanBalls(
    const SpheresInstance& instance, int count, uint64_t seed);

absl::StatusOr<ScanReport> ScanSpheres(const SpheresInstance& instance,
                                        const ScanOptions& options);

// d,ball_center_norm,radius,theta1,theta2,theta3,mass,mass_threshold,
// best_loss,verdict
std::string ScanCsvHeader();
std::string ScanCsvRows(const ScanReport& report);

}  // namespace locaudit

#endif  // LOCAUDIT_SPHERES_SCAN_H_

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

#include "locaudit/spheres/scan.h"

#include <cmath>
#include <numbers>

#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"
#include "locaudit/core/parallel.h"
#include "locaudit/distributions/sphere_sampling.h"
#include "locaudit/spheres/psi.h"

namespace locaudit {
namespace {

constexpr double kLossFloor = 1.0 / 6.0;

}  // namespace

absl::string_view BallKindName(BallKind kind) {
  switch (kind) {
    case BallKind::kAllSpace:
      return "all_space";
    case BallKind::kPoint:
      return "point";
    case BallKind::kTiny:
      return "tiny";
    case BallKind::kRandom:
      return "random";
  }
  return "random";
}

bool ScanReport::AllPass() const {
  for (const ScanRow& r : rows) {
    if (!r.pass) return false;
  }
  return true;
}

bool ScanReport::HasSmallExactBall() const {
  for (const ScanRow& r : rows) {
    if (r.mass > 0.0 && r.mass < mass_threshold && r.best_loss < 0.01) {
      return true;
    }
  }
  return false;
}

double ScanReport::AllSpaceLoss() const {
  for (const ScanRow& r : rows) {
    if (r.kind == BallKind::kAllSpace) return r.best_loss;
  }
  return -1.0;
}

std::vector<std::pair<BallKind, Ball>> ScanBalls(
    const SpheresInstance& instance, int count, uint64_t seed) {
  const int d = instance.d();
  std::vector<std::pair<BallKind, Ball>> balls;
  balls.emplace_back(BallKind::kAllSpace,
                     *Ball::Create(Point(std::vector<double>(d, 0.0)), 2.0));
  balls.emplace_back(BallKind::kPoint, *Ball::Create(instance.x_star, 0.0));
  // Reaches neither the middle nor the inner sphere (they sit >= beta away).
  balls.emplace_back(BallKind::kTiny,
                     *Ball::Create(instance.x_star, 0.25 * instance.beta()));
  Rng rng(DeriveSeed(seed, 0x5ca11));
  const double log_lo = std::log(0.1 * instance.beta());
  const double log_hi = std::log(3.0);
  while (static_cast<int>(balls.size()) < count) {
    const double r = std::exp(log_lo + (log_hi - log_lo) * Uniform01(rng));
    const Point u = *SampleUniformSphere(d, 1.0, rng);
    // Offset below r keeps x* inside the ball.
    const double t = 0.999 * r * Uniform01(rng);
    std::vector<double> c(d);
    for (int i = 0; i < d; ++i) c[i] = instance.x_star[i] + t * u[i];
    balls.emplace_back(BallKind::kRandom, *Ball::Create(Point(c), r));
  }
  return balls;
}

absl::StatusOr<ScanReport> ScanSpheres(const SpheresInstance& instance,
                                        const ScanOptions& options) {
  if (options.balls < 3) {
    return ParameterOutOfRangeError("a scan needs at least 3 balls");
  }
  ScanReport report;
  report.d = instance.d();
  report.slack = options.slack;
  report.mass_threshold = instance.MassThreshold();
  report.psi_pi_over_3 = Psi(std::numbers::pi / 3.0, instance.d());
  const auto balls = ScanBalls(instance, options.balls, options.seed);
  report.rows.resize(balls.size());
  std::vector<absl::Status> errors(balls.size());

  ParallelFor(balls.size(), options.workers, [&](int64_t i) {
    const auto& [kind, ball] = balls[i];
    ScanRow& row = report.rows[i];
    row.d = instance.d();
    row.kind = kind;
    row.center_norm = ball.center().Norm();
    row.radius = ball.radius();
    row.mass_threshold = report.mass_threshold;
    const CapDecomposition caps = DecomposeBall(instance.dist.radii(), ball);
    row.theta = caps.theta;
    row.mass = caps.mass;
    if (caps.mass > 0.0) {
      LinearFitOptions fit = options.fit;
      if (kind == BallKind::kAllSpace) fit.n_points = options.all_space_points;
      Rng rng(DeriveSeed(options.seed, static_cast<uint64_t>(i) + 1));
      absl::StatusOr<LinearFitResult> res =
          BestLinearLoss(instance, ball, fit, rng);
      if (!res.ok()) {
        errors[i] = res.status();
        return;
      }
      row.best_loss = res->loss;
      row.train_loss = res->train_loss;
    }
    row.pass = row.mass < row.mass_threshold ||
               row.best_loss >= kLossFloor - options.slack;
  });
  for (size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].ok()) {
      return absl::Status(errors[i].code(),
                          absl::StrFormat("ball %d: %s", i,
                                          errors[i].message()));
    }
  }
  return report;
}

std::string ScanCsvHeader() {
  return "d,ball_center_norm,radius,theta1,theta2,theta3,mass,mass_threshold,"
         "best_loss,verdict\n";
}

std::string ScanCsvRows(const ScanReport& report) {
  std::string out;
  for (const ScanRow& r : report.rows) {
    absl::StrAppendFormat(&out, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                                "%.17g,%s\n",
                          r.d, r.center_norm, r.radius, r.theta[0],
                          r.theta[1], r.theta[2], r.mass, r.mass_threshold,
                          r.best_loss, r.pass ? "PASS" : "FAIL");
  }
  return out;
}

}  // namespace locaudit

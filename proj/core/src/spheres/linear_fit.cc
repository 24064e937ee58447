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

#include "locaudit/spheres/linear_fit.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

LabelledSample DrawSample(const SpheresInstance& instance,
                          const CapDecomposition& caps, int n, Rng& rng) {
  LabelledSample s;
  s.x.reserve(n);
  s.y.reserve(n);
  for (int i = 0; i < n; ++i) {
    Point x = *SampleInBall(instance.dist.radii(), caps, rng);
    s.y.push_back(instance.f.Classify(x));
    s.x.push_back(std::move(x));
  }
  return s;
}

// Best threshold for "+1 iff <u, x> >= b" along one orientation.
std::pair<int64_t, double> SweepOneSide(const LabelledSample& sample,
                                        std::span<const double> u) {
  const size_t n = sample.x.size();
  std::vector<double> t(n);
  for (size_t k = 0; k < n; ++k) t[k] = Dot(u, sample.x[k].coords());
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return t[a] < t[b]; });
  int64_t negatives = 0;
  for (Label y : sample.y) negatives += y == Label::kNegative;
  // Threshold just below position j: the first j points go to -1.
  int64_t errors = negatives;  // j = 0, everything +1
  int64_t best = errors;
  double best_b = n > 0 ? t[order[0]] - 1.0 : 0.0;
  for (size_t j = 1; j <= n; ++j) {
    const Label moved = sample.y[order[j - 1]];
    errors += moved == Label::kPositive ? 1 : -1;
    const bool splittable = j == n || t[order[j - 1]] < t[order[j]];
    if (splittable && errors < best) {
      best = errors;
      best_b = j == n ? t[order[n - 1]] + 1.0 : t[order[j]];
    }
  }
  return {best, best_b};
}

struct Candidate {
  std::vector<double> w;
  double b;
};

// Smoothed-surrogate descent in coordinates z = (x - c) / r.
Candidate SurrogateSearch(const std::vector<std::vector<double>>& z,
                          const std::vector<double>& y, std::vector<double> w,
                          double b, int iterations) {
  const size_t n = z.size();
  const size_t d = w.size();
  auto normalize = [&](std::vector<double>& ww, double& bb) {
    double n2 = 0.0;
    for (double v : ww) n2 += v * v;
    const double inv = 1.0 / std::sqrt(std::max(n2, 1e-300));
    for (double& v : ww) v *= inv;
    bb *= inv;
  };
  auto errors = [&](const std::vector<double>& ww, double bb) {
    int64_t e = 0;
    for (size_t k = 0; k < n; ++k) {
      const double score = Dot(ww, z[k]) >= bb ? 1.0 : -1.0;
      e += score != y[k];
    }
    return e;
  };
  normalize(w, b);
  Candidate best{w, b};
  int64_t best_errors = errors(w, b);
  std::vector<double> gw(d);
  for (int it = 0; it < iterations; ++it) {
    const double frac = iterations > 1 ? double(it) / (iterations - 1) : 1.0;
    const double tau = 0.3 * std::pow(0.01 / 0.3, frac);
    const double step = 0.2 * std::pow(0.002 / 0.2, frac);
    std::fill(gw.begin(), gw.end(), 0.0);
    double gb = 0.0;
    for (size_t k = 0; k < n; ++k) {
      const double m = y[k] * (Dot(w, z[k]) - b) / tau;
      if (m > 40.0) continue;  // flat region of the sigmoid
      const double s = 1.0 / (1.0 + std::exp(m));
      const double g = s * (1.0 - s) * y[k];
      for (size_t i = 0; i < d; ++i) gw[i] -= g * z[k][i];
      gb += g;
    }
    double gn2 = gb * gb;
    for (double v : gw) gn2 += v * v;
    if (!(gn2 > 0.0)) break;
    const double scale = step / std::sqrt(gn2);
    for (size_t i = 0; i < d; ++i) w[i] -= scale * gw[i];
    b -= scale * gb;
    normalize(w, b);
    if (it % 10 == 9 || it + 1 == iterations) {
      const int64_t e = errors(w, b);
      if (e < best_errors) {
        best_errors = e;
        best = {w, b};
      }
    }
  }
  return best;
}

}  // namespace

int64_t ZeroOneErrors(const LabelledSample& sample,
                      const LinearClassifier& g) {
  int64_t e = 0;
  for (size_t k = 0; k < sample.x.size(); ++k) {
    e += g.Predict(sample.x[k]) != sample.y[k];
  }
  return e;
}

std::pair<int64_t, LinearClassifier> BestAxisThreshold(
    const LabelledSample& sample, std::span<const double> direction) {
  std::vector<double> u(direction.begin(), direction.end());
  auto [e_pos, b_pos] = SweepOneSide(sample, u);
  std::vector<double> neg(u.size());
  for (size_t i = 0; i < u.size(); ++i) neg[i] = -u[i];
  auto [e_neg, b_neg] = SweepOneSide(sample, neg);
  LinearClassifier g = e_pos <= e_neg ? *LinearClassifier::Create(u, b_pos)
                                      : *LinearClassifier::Create(neg, b_neg);
  // Re-count with the normalized classifier so ties are judged exactly as
  // Predict judges them.
  return {ZeroOneErrors(sample, g), g};
}

absl::StatusOr<LinearFitResult> BestLinearLoss(const SpheresInstance& instance,
                                               const Ball& ball,
                                               const LinearFitOptions& options,
                                               Rng& rng) {
  if (ball.dim() != instance.d()) {
    return DimensionMismatchError("ball dimension vs instance dimension");
  }
  if (options.n_points < 1) {
    return ParameterOutOfRangeError("n_points must be >= 1");
  }
  LinearFitResult result;
  result.caps = DecomposeBall(instance.dist.radii(), ball);
  if (!(result.caps.mass > 0.0)) {
    return MakeError(ErrorKind::kZeroMassBall,
                     "ball carries no mass under the spheres distribution");
  }
  const LabelledSample train =
      DrawSample(instance, result.caps, options.n_points, rng);
  const LabelledSample holdout =
      DrawSample(instance, result.caps, options.n_points, rng);
  const int d = instance.d();

  std::vector<LinearClassifier> candidates;
  auto [axis_errors, axis_g] = BestAxisThreshold(train, result.caps.axis);
  result.axis_loss = double(axis_errors) / options.n_points;
  candidates.push_back(axis_g);

  const double r = std::max(ball.radius(), 1e-300);
  std::vector<std::vector<double>> z(train.x.size(), std::vector<double>(d));
  std::vector<double> y(train.x.size());
  for (size_t k = 0; k < train.x.size(); ++k) {
    for (int i = 0; i < d; ++i) {
      z[k][i] = (train.x[k][i] - ball.center()[i]) / r;
    }
    y[k] = ToInt(train.y[k]);
  }
  for (int rs = 0; rs < options.restarts; ++rs) {
    std::vector<double> w0(d);
    if (rs < 2) {
      for (int i = 0; i < d; ++i) {
        w0[i] = (rs == 0 ? 1.0 : -1.0) * result.caps.axis[i];
      }
    } else {
      for (double& v : w0) v = StandardNormal(rng);
    }
    const double b0 =
        z.empty() ? 0.0 : Dot(w0, z[UniformIndex(rng, z.size())]);
    Candidate c = SurrogateSearch(z, y, std::move(w0), b0, options.iterations);
    // Back to x coordinates: <w, (x - c)/r> >= b  <=>  <w, x> >= r b + <w, c>.
    const double bx = r * c.b + Dot(c.w, ball.center().coords());
    absl::StatusOr<LinearClassifier> g = LinearClassifier::Create(c.w, bx);
    if (g.ok()) candidates.push_back(*std::move(g));
  }

  int64_t best_errors = -1;
  for (const LinearClassifier& g : candidates) {
    const int64_t e = ZeroOneErrors(train, g);
    if (best_errors < 0 || e < best_errors) {
      best_errors = e;
      result.classifier = g;
    }
  }
  result.train_loss = double(best_errors) / options.n_points;
  result.loss =
      double(ZeroOneErrors(holdout, result.classifier)) / options.n_points;
  return result;
}

}  // namespace locaudit

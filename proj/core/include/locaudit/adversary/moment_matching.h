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

// Two probability lists p, q of length 2m whose power sums agree for every
// order below 2m. Both are affine images c + s * offset of root sets:
//   p offsets: roots of P_l(x) = prod_{o odd, o <= 4l-1} (x^2 - o^2)
//   q offsets: roots of Q_l(x) = P_l(x) - P_l(0)
// with c = gamma (1 + 2 eps1), s = 2 gamma eps, eps = 1 / (8 l). Q_l and P_l
// differ only in the constant term, so their elementary symmetric functions
// (hence power sums) agree below degree 4l = 2m.

#ifndef LOCAUDIT_ADVERSARY_MOMENT_MATCHING_H_
#define LOCAUDIT_ADVERSARY_MOMENT_MATCHING_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace locaudit {

// l = largest integer strictly below 1 / (8 max(2 eps1, eps2)).
int MomentMatchingL(double eps1, double eps2);

// Odd offsets -(4l-1), ..., -1, 1, ..., 4l-1 (sorted).
std::vector<double> POffsets(int l);

// Sign of Q_l(x) in {-1, 0, +1}; exact up to ~1e-40 relative.
int QSign(int l, double x);

// The 4l roots of Q_l, sorted, bisected to `tol` in offset space. The double
// root at zero appears twice.
absl::StatusOr<std::vector<double>> QOffsets(int l, double tol = 1e-13);

// sum_i x_i^t in 50-digit arithmetic.
long double PowerSum(const std::vector<double>& xs, int t);

struct MomentMatchedProbs {
  int l = 0;
  int m = 0;  // 2l
  double eps = 0.0;
  double gamma = 0.0;
  double eps1 = 0.0;
  double eps2 = 0.0;
  double center = 0.0;  // gamma (1 + 2 eps1)
  double scale = 0.0;   // 2 gamma eps
  std::vector<double> p_offsets;
  std::vector<double> q_offsets;
  std::vector<double> p;  // sorted, size 2m
  std::vector<double> q;  // sorted, size 2m

  // |sum p^t - sum q^t| / max(1, sum p^t).
  double RelativeResidual(int t) const;

  // Each condition individually; OK or ConstructionRejected with details.
  absl::Status CheckPowerSums(double rel_tol = 1e-9) const;   // condition 1
  absl::Status CheckSeparation() const;                       // condition 2
  absl::Status CheckDoubleRoot(double tol = 1e-12) const;     // condition 3
  absl::Status CheckOrderRange() const;                       // condition 4
  absl::Status CheckRange() const;  // every value in [0, 1]
};

// Builds and verifies all four conditions plus the [0, 1] range.
//
// Errors: ParameterOutOfRange unless 0 < gamma, eps1, eps2 < 1/48 (gamma
// only needs < 1/3; see GammaNeedsWarning), ConstructionRejected when a
// verified condition fails.
absl::StatusOr<MomentMatchedProbs> BuildMomentMatchedProbs(double gamma,
                                                           double eps1,
                                                           double eps2);

// True when 1/48 <= gamma < 1/3: accepted, but the root construction is
// only guaranteed for gamma < 1/48.
bool GammaNeedsWarning(double gamma);

}  // namespace locaudit

#endif  // LOCAUDIT_ADVERSARY_MOMENT_MATCHING_H_

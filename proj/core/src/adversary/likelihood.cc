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

#include "locaudit/adversary/likelihood.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_format.h"
#include "locaudit/core/errors.h"

namespace locaudit {

long double LogCellLikelihood(const std::vector<double>& r, int64_t negatives,
                              int64_t positives) {
  constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();
  std::vector<long double> terms;
  terms.reserve(r.size());
  for (double rj : r) {
    const long double x = rj;
    long double t = 0.0L;
    if (negatives > 0) t += negatives * (x > 0 ? std::log(x) : kNegInf);
    if (positives > 0) t += positives * (x < 1 ? std::log1p(-x) : kNegInf);
    terms.push_back(t);
  }
  const long double top = *std::max_element(terms.begin(), terms.end());
  if (top == kNegInf) return kNegInf;
  long double sum = 0.0L;
  for (long double t : terms) sum += std::exp(t - top);
  return top + std::log(sum) - std::log(static_cast<long double>(r.size()));
}

absl::StatusOr<std::vector<CellCounts>> CountByCell(
    const PartitionSpec& partition, const std::vector<Point>& points,
    const std::vector<Label>& labels) {
  if (points.size() != labels.size()) {
    return DimensionMismatchError("points and labels differ in length");
  }
  // (cell, sub-cell, label) for every inside point.
  std::vector<std::tuple<int64_t, int64_t, Label>> located;
  located.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].dim() != partition.dim()) {
      return DimensionMismatchError(
          absl::StrFormat("point %d has dimension %d, expected %d", i,
                          points[i].dim(), partition.dim()));
    }
    const auto [cell, sub] = partition.LocateBoth(points[i]);
    if (cell < 0) {
      if (labels[i] != Label::kPositive) {
        return MakeError(ErrorKind::kOutsideLabelViolation,
                         absl::StrFormat("point %d lies outside every cell "
                                         "but is labelled -1",
                                         i));
      }
      continue;
    }
    located.emplace_back(cell, sub, labels[i]);
  }
  std::sort(located.begin(), located.end());
  std::vector<CellCounts> out;
  for (size_t i = 0; i < located.size(); ++i) {
    const auto& [cell, sub, label] = located[i];
    if (i > 0) {
      const auto& [pc, ps, pl] = located[i - 1];
      if (pc == cell && ps == sub) {
        if (pl != label) {
          return MakeError(
              ErrorKind::kInconsistentLabels,
              absl::StrFormat("sub-cell %d of cell %d carries both labels",
                              sub, cell));
        }
        continue;  // duplicate
      }
    }
    if (out.empty() || out.back().cell != cell) out.push_back({cell, 0, 0});
    if (label == Label::kNegative) {
      ++out.back().negatives;
    } else {
      ++out.back().positives;
    }
  }
  return out;
}

double LikelihoodRatioFromCounts(const MomentMatchedProbs& probs,
                                 const std::vector<CellCounts>& counts) {
  // Cells repeat a handful of (negatives, positives) pairs.
  absl::flat_hash_map<std::pair<int64_t, int64_t>, long double> memo;
  long double log_ratio = 0.0L;
  for (const CellCounts& c : counts) {
    auto [it, fresh] = memo.try_emplace({c.negatives, c.positives}, 0.0L);
    if (fresh) {
      it->second = LogCellLikelihood(probs.p, c.negatives, c.positives) -
                   LogCellLikelihood(probs.q, c.negatives, c.positives);
    }
    log_ratio += it->second;
  }
  return static_cast<double>(std::exp(log_ratio));
}

absl::StatusOr<double> LikelihoodRatio(const PartitionSpec& partition,
                                       const MomentMatchedProbs& probs,
                                       const std::vector<Point>& points,
                                       const std::vector<Label>& labels) {
  absl::StatusOr<std::vector<CellCounts>> counts =
      CountByCell(partition, points, labels);
  if (!counts.ok()) return counts.status();
  return LikelihoodRatioFromCounts(probs, *counts);
}

int64_t MaxDistinctPerCell(const std::vector<CellCounts>& counts) {
  int64_t best = 0;
  for (const CellCounts& c : counts) {
    best = std::max(best, c.negatives + c.positives);
  }
  return best;
}

}  // namespace locaudit

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

// Pr[Y | P = 1, X] / Pr[Y | P = 0, X] for labels drawn from f*.
//
// Points sharing a sub-cell carry one label, so duplicates are dropped first.
// Cells are independent given the world; inside a cell with a negatives and
// b positives (distinct sub-cells) the likelihood is
//   (1 / 2m) sum_j r_j^a (1 - r_j)^b.
// When a + b < 2m every such term is a polynomial of degree < 2m in r_j and
// the matched power sums make the two worlds agree exactly.

#ifndef LOCAUDIT_ADVERSARY_LIKELIHOOD_H_
#define LOCAUDIT_ADVERSARY_LIKELIHOOD_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "locaudit/adversary/moment_matching.h"
#include "locaudit/adversary/partition.h"
#include "locaudit/core/classifiers.h"

namespace locaudit {

// Distinct-sub-cell label counts inside one cell.
struct CellCounts {
  int64_t cell = 0;
  int64_t negatives = 0;
  int64_t positives = 0;
};

// ln((1 / |r|) sum_j r_j^a (1 - r_j)^b).
long double LogCellLikelihood(const std::vector<double>& r, int64_t negatives,
                              int64_t positives);

// Groups (X, Y) by cell after deduplication.
// Errors: InconsistentLabels when one sub-cell carries both labels,
// OutsideLabelViolation when a point outside every cell is labelled -1,
// DimensionMismatch on length or dimension mismatch.
absl::StatusOr<std::vector<CellCounts>> CountByCell(
    const PartitionSpec& partition, const std::vector<Point>& points,
    const std::vector<Label>& labels);

double LikelihoodRatioFromCounts(const MomentMatchedProbs& probs,
                                 const std::vector<CellCounts>& counts);

absl::StatusOr<double> LikelihoodRatio(const PartitionSpec& partition,
                                       const MomentMatchedProbs& probs,
                                       const std::vector<Point>& points,
                                       const std::vector<Label>& labels);

// Largest number of distinct sub-cells seen in one cell; the ratio is
// exactly 1 while this stays below 2m.
int64_t MaxDistinctPerCell(const std::vector<CellCounts>& counts);

}  // namespace locaudit

#endif  // LOCAUDIT_ADVERSARY_LIKELIHOOD_H_

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

#include "locaudit/auditor/simple_audit.h"

#include <string>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "locaudit/auditor/bounds.h"
#include "locaudit/core/errors.h"

namespace locaudit {
namespace {

struct RegionCounts {
  int64_t points = 0;
  int64_t disagreements = 0;
};

}  // namespace

absl::StatusOr<AuditReport> SimpleAudit(const AuditInput& input,
                                        const AuditorConfig& cfg) {
  if (absl::Status s = cfg.Validate(); !s.ok()) return s;
  return SimpleAuditWith(input, cfg.gamma, SimpleAuditM(cfg),
                         SimpleAuditK(cfg));
}

absl::StatusOr<AuditReport> SimpleAuditWith(const AuditInput& input,
                                            double gamma, int64_t m,
                                            int64_t k) {
  if (absl::Status s = input.Validate(); !s.ok()) return s;
  const int64_t n = static_cast<int64_t>(input.size());
  if (n <= m) {
    return MakeError(ErrorKind::kInsufficientData,
                     absl::StrCat("need more than m = ", m, " points, got ", n));
  }
  AuditReport report;
  report.m_used = m;
  report.k_used = k;
  report.per_anchor.reserve(m);

  // Explanations repeat across anchors (partition explainers), so region
  // statistics over X_2 are computed once per distinct explanation.
  absl::flat_hash_map<std::string, RegionCounts> cache;
  for (int64_t i = 0; i < m; ++i) {
    const LocalExplanation& e = input.explanations[i];
    std::string key = ExplanationKey(e);
    auto it = cache.find(key);
    if (it == cache.end()) {
      RegionCounts c;
      for (int64_t j = m; j < n; ++j) {
        const Point& x = input.points[j];
        if (!Contains(e.region, x)) continue;
        ++c.points;
        if (Predict(e.local, x) != input.labels[j]) ++c.disagreements;
      }
      it = cache.emplace(std::move(key), c).first;
    }
    AnchorRecord rec;
    rec.anchor_index = i;
    rec.region_points = it->second.points;
    rec.disagreements = it->second.disagreements;
    if (rec.region_points >= k && rec.region_points > 0) {
      rec.empirical_loss = static_cast<double>(rec.disagreements) /
                           static_cast<double>(rec.region_points);
      if (rec.empirical_loss > gamma) {
        rec.counted_as = CountedAs::kRed;
        ++report.red;
      } else {
        rec.counted_as = CountedAs::kBlue;
        ++report.blue;
      }
    } else {
      ++report.n_skipped;
    }
    report.per_anchor.push_back(rec);
  }
  report.n_validated = report.red + report.blue;
  if (report.n_validated == 0) {
    return MakeError(
        ErrorKind::kInsufficientCoverage,
        absl::StrCat("no anchor region reached k = ", k, " points of X_2"));
  }
  report.estimate = static_cast<double>(report.red) /
                    static_cast<double>(report.n_validated);
  return report;
}

}  // namespace locaudit

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

#include "locaudit/core/explainers.h"

#include "absl/strings/str_cat.h"
#include "locaudit/core/errors.h"

namespace locaudit {

absl::StatusOr<LocalRule> ParseLocalRule(absl::string_view name) {
  if (name == "constant_positive") return LocalRule::kConstantPositive;
  if (name == "match") return LocalRule::kMatchAnchor;
  if (name == "invert") return LocalRule::kInvertAnchor;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown local rule '", name,
                   "' (expected constant_positive, match, invert)"));
}

ConstantClassifier ApplyRule(LocalRule rule, const Classifier& f,
                             const Point& x) {
  switch (rule) {
    case LocalRule::kConstantPositive:
      return ConstantClassifier{Label::kPositive};
    case LocalRule::kMatchAnchor:
      return ConstantClassifier{f.Classify(x)};
    case LocalRule::kInvertAnchor:
      return ConstantClassifier{Flip(f.Classify(x))};
  }
  return ConstantClassifier{Label::kPositive};
}

absl::StatusOr<PartitionExplainer> PartitionExplainer::Create(
    std::vector<HyperRectangle> cells, LocalRule rule) {
  if (cells.empty()) {
    return absl::InvalidArgumentError("partition explainer needs cells");
  }
  for (const auto& c : cells) {
    if (c.dim() != cells.front().dim()) {
      return DimensionMismatchError("partition cells differ in dimension");
    }
  }
  return PartitionExplainer(std::move(cells), rule);
}

int PartitionExplainer::Locate(const Point& x) const {
  for (size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].Contains(x)) return static_cast<int>(i);
  }
  return -1;
}

LocalExplanation PartitionExplainer::Explain(const Classifier& f,
                                             const Point& x) const {
  const int i = Locate(x);
  Region region = i >= 0 ? Region(cells_[i])
                         : Region(HyperRectangle::Everything(x.dim()));
  return LocalExplanation{x, std::move(region), ApplyRule(rule_, f, x)};
}

LocalExplanation WholeSpaceExplainer::Explain(const Classifier& f,
                                              const Point& x) const {
  return LocalExplanation{x, HyperRectangle::Everything(dim_),
                          ApplyRule(rule_, f, x)};
}

LocalExplanation BallExplainer::Explain(const Classifier&,
                                        const Point& x) const {
  return LocalExplanation{x, *Ball::Create(x, radius_), local_};
}

}  // namespace locaudit

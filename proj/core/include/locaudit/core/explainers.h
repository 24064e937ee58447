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

// Reference explainers used by tests, experiments, and the CLI.

#ifndef LOCAUDIT_CORE_EXPLAINERS_H_
#define LOCAUDIT_CORE_EXPLAINERS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "locaudit/core/classifiers.h"

namespace locaudit {

// How a region-based explainer picks its constant local classifier.
enum class LocalRule {
  kConstantPositive,  // always g = +1
  kMatchAnchor,       // g = f(x)
  kInvertAnchor,      // g = -f(x)
};

absl::StatusOr<LocalRule> ParseLocalRule(absl::string_view name);

ConstantClassifier ApplyRule(LocalRule rule, const Classifier& f,
                             const Point& x);

// Explains x with the first cell that contains it. Cells are expected to be
// disjoint; points outside every cell get the whole space.
class PartitionExplainer final : public Explainer {
 public:
  static absl::StatusOr<PartitionExplainer> Create(
      std::vector<HyperRectangle> cells, LocalRule rule);

  LocalExplanation Explain(const Classifier& f, const Point& x) const override;
  ExplainerClass explainer_class() const override {
    return ExplainerClass::kRectConstant;
  }

  const std::vector<HyperRectangle>& cells() const { return cells_; }
  // Index of the cell holding x, or -1.
  int Locate(const Point& x) const;

 private:
  PartitionExplainer(std::vector<HyperRectangle> cells, LocalRule rule)
      : cells_(std::move(cells)), rule_(rule) {}

  std::vector<HyperRectangle> cells_;
  LocalRule rule_;
};

// (whole space, rule-chosen constant) at every anchor.
class WholeSpaceExplainer final : public Explainer {
 public:
  WholeSpaceExplainer(int dim, LocalRule rule) : dim_(dim), rule_(rule) {}

  LocalExplanation Explain(const Classifier& f, const Point& x) const override;
  ExplainerClass explainer_class() const override {
    return ExplainerClass::kRectConstant;
  }

 private:
  int dim_;
  LocalRule rule_;
};

// (ball of fixed radius around x, fixed linear classifier).
class BallExplainer final : public Explainer {
 public:
  BallExplainer(double radius, LinearClassifier local)
      : radius_(radius), local_(std::move(local)) {}

  LocalExplanation Explain(const Classifier& f, const Point& x) const override;
  ExplainerClass explainer_class() const override {
    return ExplainerClass::kBallLinear;
  }

 private:
  double radius_;
  LinearClassifier local_;
};

}  // namespace locaudit

#endif  // LOCAUDIT_CORE_EXPLAINERS_H_

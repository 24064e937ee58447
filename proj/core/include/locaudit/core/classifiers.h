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

// Explanation data model: binary labels, black-box classifiers, the simple
// local classifiers an explanation may carry, and the explainer interface.

#ifndef LOCAUDIT_CORE_CLASSIFIERS_H_
#define LOCAUDIT_CORE_CLASSIFIERS_H_

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "locaudit/core/geometry.h"

namespace locaudit {

enum class Label : int { kNegative = -1, kPositive = 1 };

inline Label Flip(Label y) {
  return y == Label::kPositive ? Label::kNegative : Label::kPositive;
}
inline int ToInt(Label y) { return static_cast<int>(y); }

// A member of C_d: always returns `label`.
struct ConstantClassifier {
  Label label = Label::kPositive;

  Label Predict(const Point&) const { return label; }
  friend bool operator==(const ConstantClassifier&,
                         const ConstantClassifier&) = default;
};

// A member of L_d: +1 exactly when <w, z> >= b (ties go to +1).
class LinearClassifier {
 public:
  // `w` is normalized to unit length; it must be nonzero and finite.
  static absl::StatusOr<LinearClassifier> Create(std::vector<double> w,
                                                 double b);

  Label Predict(const Point& z) const;
  double Score(const Point& z) const;  // <w, z> - b

  const std::vector<double>& w() const { return w_; }
  double b() const { return b_; }
  int dim() const { return static_cast<int>(w_.size()); }

  friend bool operator==(const LinearClassifier&,
                         const LinearClassifier&) = default;

 private:
  LinearClassifier(std::vector<double> w, double b)
      : w_(std::move(w)), b_(b) {}

  std::vector<double> w_;
  double b_ = 0.0;
};

using LocalClassifier = std::variant<ConstantClassifier, LinearClassifier>;

Label Predict(const LocalClassifier& g, const Point& z);

// Deterministic black-box classifier R^d -> {+1, -1}.
class Classifier {
 public:
  virtual ~Classifier() = default;
  virtual Label Classify(const Point& x) const = 0;
};

class FunctionClassifier final : public Classifier {
 public:
  explicit FunctionClassifier(std::function<Label(const Point&)> fn)
      : fn_(std::move(fn)) {}
  Label Classify(const Point& x) const override { return fn_(x); }

 private:
  std::function<Label(const Point&)> fn_;
};

// (R_x, g_x) attached to the anchor x. The anchor lies in the region.
struct LocalExplanation {
  Point anchor;
  Region region;
  LocalClassifier local;

  friend bool operator==(const LocalExplanation&,
                         const LocalExplanation&) = default;
};

absl::StatusOr<LocalExplanation> MakeExplanation(Point anchor, Region region,
                                                 LocalClassifier local);

// Stable byte key for (region, local); identical explanations share a key.
std::string ExplanationKey(const LocalExplanation& e);

enum class ExplainerClass { kRectConstant, kBallLinear, kOther };

absl::string_view ExplainerClassName(ExplainerClass c);

// E(f, x). Implementations are deterministic per (f, x) and always return an
// explanation anchored at x.
class Explainer {
 public:
  virtual ~Explainer() = default;
  virtual LocalExplanation Explain(const Classifier& f,
                                   const Point& x) const = 0;
  virtual ExplainerClass explainer_class() const = 0;
};

// True when `e` lies in the class advertised by `c`.
bool ConformsToClass(const LocalExplanation& e, ExplainerClass c);

}  // namespace locaudit

#endif  // LOCAUDIT_CORE_CLASSIFIERS_H_

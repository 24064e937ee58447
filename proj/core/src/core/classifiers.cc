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

#include "locaudit/core/classifiers.h"

#include <cmath>
#include <cstring>

#include "absl/strings/str_cat.h"
#include "locaudit/core/errors.h"

namespace locaudit {

absl::StatusOr<LinearClassifier> LinearClassifier::Create(std::vector<double> w,
                                                          double b) {
  if (w.empty()) return absl::InvalidArgumentError("empty weight vector");
  if (!std::isfinite(b)) {
    return absl::InvalidArgumentError("linear offset must be finite");
  }
  double norm2 = 0.0;
  for (double wi : w) {
    if (!std::isfinite(wi)) {
      return absl::InvalidArgumentError("weight vector is not finite");
    }
    norm2 += wi * wi;
  }
  if (!(norm2 > 0.0)) {
    return absl::InvalidArgumentError("weight vector is zero");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& wi : w) wi *= inv;
  return LinearClassifier(std::move(w), b);
}

double LinearClassifier::Score(const Point& z) const {
  return Dot(w_, z.coords()) - b_;
}

Label LinearClassifier::Predict(const Point& z) const {
  return Dot(w_, z.coords()) >= b_ ? Label::kPositive : Label::kNegative;
}

Label Predict(const LocalClassifier& g, const Point& z) {
  return std::visit([&](const auto& c) { return c.Predict(z); }, g);
}

absl::StatusOr<LocalExplanation> MakeExplanation(Point anchor, Region region,
                                                 LocalClassifier local) {
  if (Dim(region) != anchor.dim()) {
    return DimensionMismatchError(
        absl::StrCat("anchor dim ", anchor.dim(), " vs region dim ",
                     Dim(region)));
  }
  if (const auto* lin = std::get_if<LinearClassifier>(&local);
      lin != nullptr && lin->dim() != anchor.dim()) {
    return DimensionMismatchError("linear classifier dimension");
  }
  if (!Contains(region, anchor)) {
    return absl::InvalidArgumentError("anchor is not inside its region");
  }
  return LocalExplanation{std::move(anchor), std::move(region),
                          std::move(local)};
}

namespace {

void AppendDouble(std::string& out, double v) {
  char buf[sizeof(double)];
  std::memcpy(buf, &v, sizeof(double));
  out.append(buf, sizeof(double));
}

}  // namespace

std::string ExplanationKey(const LocalExplanation& e) {
  std::string key;
  if (const auto* rect = std::get_if<HyperRectangle>(&e.region)) {
    key.push_back('R');
    for (int i = 0; i < rect->dim(); ++i) {
      AppendDouble(key, rect->lo(i));
      AppendDouble(key, rect->hi(i));
    }
  } else {
    const auto& ball = std::get<Ball>(e.region);
    key.push_back('B');
    for (double c : ball.center().coords()) AppendDouble(key, c);
    AppendDouble(key, ball.radius());
  }
  if (const auto* c = std::get_if<ConstantClassifier>(&e.local)) {
    key.push_back(c->label == Label::kPositive ? '+' : '-');
  } else {
    const auto& lin = std::get<LinearClassifier>(e.local);
    key.push_back('L');
    for (double wi : lin.w()) AppendDouble(key, wi);
    AppendDouble(key, lin.b());
  }
  return key;
}

absl::string_view ExplainerClassName(ExplainerClass c) {
  switch (c) {
    case ExplainerClass::kRectConstant:
      return "RectConstant";
    case ExplainerClass::kBallLinear:
      return "BallLinear";
    case ExplainerClass::kOther:
      return "Other";
  }
  return "Other";
}

bool ConformsToClass(const LocalExplanation& e, ExplainerClass c) {
  switch (c) {
    case ExplainerClass::kRectConstant:
      return std::holds_alternative<HyperRectangle>(e.region) &&
             std::holds_alternative<ConstantClassifier>(e.local);
    case ExplainerClass::kBallLinear:
      return std::holds_alternative<Ball>(e.region) &&
             std::holds_alternative<LinearClassifier>(e.local);
    case ExplainerClass::kOther:
      return true;
  }
  return false;
}

}  // namespace locaudit

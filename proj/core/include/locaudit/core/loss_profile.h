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

#ifndef LOCAUDIT_CORE_LOSS_PROFILE_H_
#define LOCAUDIT_CORE_LOSS_PROFILE_H_

#include <vector>

namespace locaudit {

// Exact law of the local loss L(E, f, x) for x ~ mu when the explainer has
// finitely many distinct explanations: a list of (mass, loss) atoms.
struct LossAtom {
  double mass = 0.0;
  double loss = 0.0;
};

class LossProfile {
 public:
  LossProfile() = default;
  explicit LossProfile(std::vector<LossAtom> atoms)
      : atoms_(std::move(atoms)) {}

  void Add(double mass, double loss) { atoms_.push_back({mass, loss}); }

  // L_alpha = mu({x : L(E, f, x) >= alpha}), summed in insertion order.
  double LossAtLeast(double alpha) const;
  double TotalMass() const;

  const std::vector<LossAtom>& atoms() const { return atoms_; }

 private:
  std::vector<LossAtom> atoms_;
};

}  // namespace locaudit

#endif  // LOCAUDIT_CORE_LOSS_PROFILE_H_

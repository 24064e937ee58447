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

#include "locaudit/core/loss_profile.h"

namespace locaudit {

double LossProfile::LossAtLeast(double alpha) const {
  double total = 0.0;
  for (const LossAtom& a : atoms_) {
    if (a.loss >= alpha) total += a.mass;
  }
  return total;
}

double LossProfile::TotalMass() const {
  double total = 0.0;
  for (const LossAtom& a : atoms_) total += a.mass;
  return total;
}

}  // namespace locaudit

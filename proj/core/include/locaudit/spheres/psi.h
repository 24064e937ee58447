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

// Fraction of the (d-1)-sphere covered by a spherical cap of half-angle
// theta: Psi(theta, d) = int_0^theta sin^{d-2} / int_0^pi sin^{d-2}.

#ifndef LOCAUDIT_SPHERES_PSI_H_
#define LOCAUDIT_SPHERES_PSI_H_

namespace locaudit {

// Adaptive Gauss-Kronrod quadrature. theta is clamped to [0, pi]; d >= 2.
double Psi(double theta, int d);

// int_0^theta sin^{d-2}(phi) dphi, unnormalized.
double CapIntegral(double theta, int d);

// Psi(c * theta) / Psi(theta) as a ratio of integrals, so the (possibly
// tiny) normalizer never enters.
double PsiRatio(double c, double theta, int d);

// Second route through the regularized incomplete beta function:
// Psi = I_{sin^2 theta}((d-1)/2, 1/2) / 2 for theta <= pi/2, mirrored above.
double PsiIncompleteBeta(double theta, int d);

// Inverse of Psi in theta for t in [0, 1].
double PsiInverse(double t, int d);

}  // namespace locaudit

#endif  // LOCAUDIT_SPHERES_PSI_H_

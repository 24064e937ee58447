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

#ifndef LOCAUDIT_CORE_RANDOM_H_
#define LOCAUDIT_CORE_RANDOM_H_

#include <cstdint>
#include <random>

namespace locaudit {

// Every operation that needs randomness takes an explicit stream.
using Rng = std::mt19937_64;

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

// Seed of an independent stream; a pure function of (master, index).
uint64_t DeriveSeed(uint64_t master_seed, uint64_t index);

// Uniform on [0, 1) with 53 random bits.
double Uniform01(Rng& rng);

// Uniform on (0, 1).
double UniformOpen01(Rng& rng);

double StandardNormal(Rng& rng);

// Uniform on {0, ..., n - 1}; n > 0.
uint64_t UniformIndex(Rng& rng, uint64_t n);

bool Bernoulli(Rng& rng, double p);

int64_t Binomial(Rng& rng, int64_t trials, double p);

}  // namespace locaudit

#endif  // LOCAUDIT_CORE_RANDOM_H_

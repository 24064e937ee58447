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

#ifndef LOCAUDIT_CORE_PARALLEL_H_
#define LOCAUDIT_CORE_PARALLEL_H_

#include <cstdint>
#include <functional>

namespace locaudit {

// Runs fn(i) for i in [0, n) on up to `workers` threads. Each index runs
// exactly once; callers write results into per-index slots so the outcome
// does not depend on scheduling.
void ParallelFor(int64_t n, int workers, const std::function<void(int64_t)>& fn);

// Worker count from AUDIT_WORKERS, else `fallback`.
int DefaultWorkers(int fallback = 1);

}  // namespace locaudit

#endif  // LOCAUDIT_CORE_PARALLEL_H_

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

#include "locaudit/core/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

#include "absl/strings/numbers.h"

namespace locaudit {

void ParallelFor(int64_t n, int workers,
                 const std::function<void(int64_t)>& fn) {
  if (n <= 0) return;
  const int threads = static_cast<int>(
      std::clamp<int64_t>(workers, 1, std::min<int64_t>(n, 256)));
  if (threads == 1) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int64_t> next{0};
  auto body = [&] {
    for (int64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (int t = 1; t < threads; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
}

int DefaultWorkers(int fallback) {
  const char* env = std::getenv("AUDIT_WORKERS");
  int value = 0;
  if (env != nullptr && absl::SimpleAtoi(env, &value) && value >= 1) {
    return value;
  }
  return fallback;
}

}  // namespace locaudit

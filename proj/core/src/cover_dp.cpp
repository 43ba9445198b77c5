// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chroma/cover_dp.hpp"

#include <algorithm>
#include <cassert>

namespace chroma {

std::optional<CoverDpResult> min_cost_cover(const std::vector<std::vector<long long>>& weights,
                                            const std::vector<long long>& costs,
                                            const std::vector<long long>& targets) {
  const std::size_t gamma = targets.size();
  const std::size_t n = costs.size();

  std::size_t num_states = 1;
  std::vector<std::size_t> stride(gamma, 1);
  for (std::size_t l = 0; l < gamma; ++l) {
    stride[l] = num_states;
    num_states *= static_cast<std::size_t>(std::max<long long>(targets[l], 0)) + 1;
  }
  auto bump = [&](std::size_t state, std::size_t u) {
    std::size_t next = 0;
    for (std::size_t l = 0; l < gamma; ++l) {
      long long cap = std::max<long long>(targets[l], 0);
      long long cur = static_cast<long long>(state / stride[l] % (cap + 1));
      next += stride[l] * static_cast<std::size_t>(std::min(cap, cur + weights[l][u]));
    }
    return next;
  };

  // dp[i * num_states + s]: cheapest cost reaching capped state s with
  // elements < i.
  std::vector<long long> dp((n + 1) * num_states, kUnusable);
  dp[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long long* prev = dp.data() + i * num_states;
    long long* next = dp.data() + (i + 1) * num_states;
    for (std::size_t s = 0; s < num_states; ++s) {
      if (prev[s] >= kUnusable) continue;
      next[s] = std::min(next[s], prev[s]);
      if (costs[i] >= kUnusable) continue;
      std::size_t t = bump(s, i);
      next[t] = std::min(next[t], prev[s] + costs[i]);
    }
  }

  std::size_t full = num_states - 1;
  if (dp[n * num_states + full] >= kUnusable) return std::nullopt;

  CoverDpResult result;
  result.cost = dp[n * num_states + full];
  std::size_t state = full;
  for (std::size_t i = n; i-- > 0;) {
    if (dp[i * num_states + state] == dp[(i + 1) * num_states + state]) continue;  // skipped
    bool found = false;
    for (std::size_t prev = 0; prev < num_states && !found; ++prev) {
      if (dp[i * num_states + prev] < kUnusable && costs[i] < kUnusable &&
          bump(prev, i) == state &&
          dp[i * num_states + prev] + costs[i] == dp[(i + 1) * num_states + state]) {
        result.chosen.push_back(i);
        state = prev;
        found = true;
      }
    }
    assert(found);
  }
  std::reverse(result.chosen.begin(), result.chosen.end());
  return result;
}

}  // namespace chroma

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

#ifndef CHROMA_TESTS_TEST_UTIL_HPP
#define CHROMA_TESTS_TEST_UTIL_HPP

#include <optional>
#include <vector>

#include "chroma/fcp.hpp"
#include "chroma/types.hpp"

namespace chroma::testing {

// Five-point metric used across the suites: three unit-weight clients, two
// facilities, client-facility distances {1,1,1,5,5,5}, d(f0,f1) = 4.
// Knapsack with unit costs, budget 1, requirement 2.
inline SupplierInstance tiny1() {
  SupplierInstance inst;
  inst.space.clients = {"c1", "c2", "c3"};
  inst.space.facilities = {"f1", "f2"};
  inst.space.gamma = 1;
  inst.space.weights = {{1, 1, 1}};
  inst.space.dist = {
      0, 2, 5, 1, 5,  //
      2, 0, 5, 1, 5,  //
      5, 5, 0, 5, 1,  //
      1, 1, 5, 0, 4,  //
      5, 5, 1, 4, 0,  //
  };
  inst.requirements = {2};
  inst.constraint.value = KnapsackConstraint{{1, 1}, 1};
  return inst;
}

// Exhaustive minimum of the cover binary program: min sum eta(u) z(u)
// subject to the per-color coverage requirements, z over all subsets.
// Independent of the DP implementation.
inline std::optional<long long> brute_force_cover_program(const FcpInstance& fcp) {
  const std::size_t n = fcp.universe.size();
  std::vector<long long> eta(n, -1);
  for (std::size_t s = 0; s < fcp.sets.size(); ++s) {
    long long cost = fcp.constraint.knapsack().costs[s];
    for (std::size_t u : fcp.sets[s]) {
      if (eta[u] < 0 || cost < eta[u]) eta[u] = cost;
    }
  }
  std::optional<long long> best;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    long long cost = 0;
    std::vector<long long> covered(fcp.gamma(), 0);
    bool usable = true;
    for (std::size_t u = 0; u < n && usable; ++u) {
      if (!(mask & (1ULL << u))) continue;
      if (eta[u] < 0) usable = false;
      cost += eta[u];
      for (int l = 0; l < fcp.gamma(); ++l) covered[l] += fcp.weights[l][u];
    }
    if (!usable) continue;
    bool ok = true;
    for (int l = 0; l < fcp.gamma(); ++l) ok = ok && covered[l] >= fcp.requirements[l];
    if (ok && (!best.has_value() || cost < *best)) best = cost;
  }
  return best;
}

}  // namespace chroma::testing

#endif  // CHROMA_TESTS_TEST_UTIL_HPP

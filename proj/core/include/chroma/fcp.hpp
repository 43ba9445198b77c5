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

#ifndef CHROMA_FCP_HPP
#define CHROMA_FCP_HPP

#include <optional>
#include <string>
#include <vector>

#include "chroma/partition.hpp"
#include "chroma/types.hpp"

namespace chroma {

/// Multi-dimensional cover instance over a set family. Set ids are in
/// bijection with the originating facilities, so the facility constraint is
/// interpreted over set ids unchanged.
struct FcpInstance {
  std::vector<std::string> universe;             // element ids
  std::vector<std::vector<std::size_t>> sets;    // per set id: sorted element indices
  std::vector<std::vector<long long>> weights;   // [gamma][universe]
  std::vector<long long> requirements;
  FacilityConstraint constraint;

  int gamma() const { return static_cast<int>(requirements.size()); }
  std::vector<long long> total_weights() const;
  /// Per-color weight of the union of the given sets.
  std::vector<long long> covered_by(const std::vector<std::size_t>& family) const;
};

/// Builds the cover instance of a radius guess: universe = partition parts,
/// one set per facility holding the parts within distance r of it, element
/// weights inherited from the parts.
FcpInstance build_fcp(const ColorfulSpace& space, const Partition& partition, long long radius,
                      const std::vector<long long>& requirements,
                      const FacilityConstraint& constraint);

struct FcpSolution {
  std::vector<std::size_t> family;  // selected set ids, sorted
  long long cost = 0;               // sum of selected element costs eta(u)
};

/// Knapsack solver: computes eta(u) = cost of the cheapest set containing u,
/// solves min sum eta(u) z(u) subject to the coverage requirements by dynamic
/// programming over capped requirement vectors, and recovers the family of
/// cheapest sets. Returns nullopt (infeasible) when no z meets the
/// requirements or the optimal cost exceeds the budget.
std::optional<FcpSolution> solve_fcp_knapsack(const FcpInstance& fcp);

struct FcpBruteForceResult {
  std::optional<std::vector<std::size_t>> solution;  // any feasible covering family
  bool promise_holds = false;
};

/// Exhaustive oracle: enumerates every constraint-feasible family for a
/// covering solution, and every per-set representative choice to decide
/// whether the one-representative-per-set promise holds.
FcpBruteForceResult brute_force_fcp(const FcpInstance& fcp);

}  // namespace chroma

#endif  // CHROMA_FCP_HPP

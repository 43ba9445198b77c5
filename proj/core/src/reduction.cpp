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

#include "chroma/reduction.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

#include "chroma/core.hpp"
#include "chroma/fcp.hpp"
#include "chroma/linmat.hpp"
#include "chroma/partition.hpp"
#include "chroma/rng.hpp"

namespace chroma {

long long reduction_factor_bound(int gamma) { return 10 * ((1LL << gamma) - 1) + 1; }

std::optional<ReductionResult> solve_via_reduction(const SupplierInstance& instance,
                                                   FcpSolverKind solver, std::uint64_t seed) {
  if (solver == FcpSolverKind::Knapsack && !instance.constraint.is_knapsack())
    throw std::invalid_argument("knapsack reduction requires a knapsack constraint");
  if (solver == FcpSolverKind::LinearMatroid && !instance.constraint.is_linear_matroid())
    throw std::invalid_argument("matroid reduction requires a linear matroid constraint");

  // Nothing to cover: the empty set at radius zero is optimal, which no
  // positive candidate distance could certify.
  SupplierSolution degenerate = check_solution(instance, {}, 0);
  if (degenerate.feasible) {
    return ReductionResult{std::move(degenerate), 0, reduction_factor_bound(instance.space.gamma)};
  }

  std::vector<long long> candidates = radius_candidates(instance.space);
  if (candidates.empty()) candidates.push_back(0);

  // The per-radius failure budget of the randomized solver shrinks with the
  // number of candidates so the whole loop stays below 2^-10.
  int repetitions =
      10 + std::bit_width(candidates.size() - 1);
  const long long bound = reduction_factor_bound(instance.space.gamma);

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    long long r = candidates[i];
    Partition partition = build_partition(instance.space, r);
    FcpInstance fcp =
        build_fcp(instance.space, partition, r, instance.requirements, instance.constraint);

    std::optional<std::vector<std::size_t>> family;
    if (solver == FcpSolverKind::Knapsack) {
      std::optional<FcpSolution> sol = solve_fcp_knapsack(fcp);
      if (sol.has_value()) family = sol->family;
    } else {
      family = solve_fcp_linear_matroid(fcp, Rng::derive(seed, i), repetitions);
    }
    if (!family.has_value()) continue;

    ReductionResult result;
    result.radius_guess = r;
    result.factor_bound = bound;
    // Set ids are in bijection with facilities, so the family is the center
    // set.
    result.solution = check_solution(instance, *family, bound * r);
    assert(result.solution.feasible);
    return result;
  }
  return std::nullopt;
}

}  // namespace chroma

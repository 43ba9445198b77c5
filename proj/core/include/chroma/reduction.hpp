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

#ifndef CHROMA_REDUCTION_HPP
#define CHROMA_REDUCTION_HPP

#include <cstdint>
#include <optional>

#include "chroma/types.hpp"

namespace chroma {

enum class FcpSolverKind { Knapsack, LinearMatroid };

struct ReductionResult {
  SupplierSolution solution;
  long long radius_guess = 0;   // smallest successful candidate radius r
  long long factor_bound = 0;   // L + 1 with L = 10 * (2^gamma - 1)
};

/// The full pipeline: for each candidate radius ascending, build a partition,
/// derive the cover instance, run the matching cover-promise solver, and
/// assemble the supplier solution at radius (L+1)*r for the first success.
/// If a radius-r* feasible solution exists, the returned radius is at most
/// (L+1)*r* (deterministically for knapsack constraints, with high
/// probability for linear matroids). Returns nullopt when every candidate
/// radius fails.
std::optional<ReductionResult> solve_via_reduction(const SupplierInstance& instance,
                                                   FcpSolverKind solver, std::uint64_t seed = 0);

/// L + 1 for the given number of colors.
long long reduction_factor_bound(int gamma);

}  // namespace chroma

#endif  // CHROMA_REDUCTION_HPP

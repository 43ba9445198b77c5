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

#ifndef CHROMA_CORE_HPP
#define CHROMA_CORE_HPP

#include <span>
#include <vector>

#include "chroma/types.hpp"

namespace chroma {

/// Validates shapes, metric axioms (symmetry, zero diagonal, triangle
/// inequality unless disabled) and field primality, and splits every client
/// carrying k >= 2 colors into k co-located single-color copies so that the
/// color supports become pairwise disjoint. Copies keep the original id with a
/// `~<color>` suffix. Idempotent.
SupplierInstance normalize_and_validate(const SupplierInstance& raw, bool check_triangle = true);

/// Sorted distinct client-facility distances. Every outer radius loop
/// iterates exactly this set.
std::vector<long long> radius_candidates(const ColorfulSpace& space);

/// Per-color weight of the clients within distance `radius` of some center.
std::vector<long long> coverage(const ColorfulSpace& space, std::span<const std::size_t> centers,
                                long long radius);

/// Evaluates a candidate solution: fills the covered weights and decides
/// feasibility (constraint holds and every requirement met). Pure.
SupplierSolution check_solution(const SupplierInstance& instance,
                                std::vector<std::size_t> centers, long long radius);

}  // namespace chroma

#endif  // CHROMA_CORE_HPP

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

#ifndef CHROMA_HARNESS_HPP
#define CHROMA_HARNESS_HPP

#include <cstdint>
#include <optional>

#include "chroma/primefield.hpp"
#include "chroma/types.hpp"

namespace chroma {

struct BruteForceOptimum {
  std::vector<std::size_t> centers;  // sorted
  long long radius = 0;
};

/// Ground-truth oracle: enumerates every constraint-feasible facility subset
/// and the minimal radius at which it meets all requirements; returns the
/// lexicographically smallest optimum by (radius, |S|, ids). Requires at most
/// 20 facilities.
std::optional<BruteForceOptimum> brute_force_optimal(const SupplierInstance& instance);

struct GenParams {
  std::size_t n_clients = 6;
  std::size_t n_facilities = 3;
  int gamma = 1;
  enum class Kind { Knapsack, LinearMatroid } constraint_kind = Kind::Knapsack;
  long long max_dist = 20;
  long long weight_max = 3;
  std::uint64_t seed = 0;
  // Knapsack extras.
  long long cost_max = 8;
  // Matroid extras.
  std::size_t matroid_rank = 3;
  long long prime = 2147483647;
};

/// Random feasible instance on an integer line (the line metric makes the
/// triangle inequality automatic): weights, costs and matroid columns are
/// uniform; requirements are sampled below the coverage of a random feasible
/// subset at a random candidate radius. Deterministic in the seed.
SupplierInstance generate_instance(const GenParams& params);

struct XwbInstance {
  PrimeFieldMatrix matrix;
  std::vector<long long> weights;  // per ground element
  long long target = 0;
};

/// The exact-weight-basis hardness reduction: one client plus a co-located
/// facility per ground element, spaced `separation` apart on a line, with a
/// two-color weight split so the transformed instance has a radius-0
/// solution iff the basis instance is a yes-instance.
SupplierInstance xwb_to_colorful(const XwbInstance& xwb, long long separation = 1000);

}  // namespace chroma

#endif  // CHROMA_HARNESS_HPP

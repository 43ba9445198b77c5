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

#ifndef CHROMA_KNAPSACK7_HPP
#define CHROMA_KNAPSACK7_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "chroma/simplex.hpp"
#include "chroma/types.hpp"

namespace chroma {

/// Residual instance after the guessing phases, plus the partial solutions
/// and thresholds the phases fixed. Requirements are floored at zero; the
/// budget only shrinks.
struct PhaseState {
  std::vector<std::size_t> clients;     // residual client indices, sorted
  std::vector<std::size_t> facilities;  // residual facility indices, sorted
  std::vector<long long> requirements;  // residual m, floored at 0
  long long budget = 0;                 // residual K
  long long sigma = 0;                  // cost-saving threshold
  std::vector<long long> tau;           // per-color gain thresholds
  std::vector<std::size_t> s_kappa;     // opened at 5r
  std::vector<std::size_t> s_w;         // opened at 3r
  std::vector<std::size_t> expensive_guess;  // guessed expensive facilities
  std::vector<std::size_t> removed_region;   // facilities removed with the savings
};

struct FlowerGain {
  std::vector<std::size_t> flower;  // client indices
  std::vector<long long> gains;     // per color: weight of flower minus f's ball
};

/// Flower(c) is the union of the r-balls of all facilities within r of c;
/// the gain of stretching f from r to 3r is the flower weight outside f's own
/// ball. Throws FacilityTooFar when d(f,c) > r. The view variant restricts
/// both point sets.
FlowerGain flower_gain(const ColorfulSpace& space, std::size_t facility, std::size_t client,
                       long long radius);
FlowerGain flower_gain(const ColorfulSpace& space, const std::vector<std::size_t>& clients,
                       const std::vector<std::size_t>& facilities, std::size_t facility,
                       std::size_t client, long long radius);

/// Phase 0 (cost guessing): applies a sequence of at most gamma
/// non-well-separated pairs (e, s), opening each s at 5r, removing the 4r
/// facility ball around it and banking the savings threshold sigma. Returns
/// nullopt when the residual budget would go negative; throws
/// InconsistentGuess for pairs violating separation or membership.
std::optional<PhaseState> phase0_apply(
    const SupplierInstance& instance, long long radius,
    const std::vector<std::pair<std::size_t, std::size_t>>& guess);

/// Phase 1 (color guessing): per color, a block of at most 3*gamma+1 pairs
/// (f, c) with f expensive and c within r of f. A full block fixes tau to the
/// last recorded gain; a shorter block means "no further pair exists" and
/// fixes tau to zero. Guessed facilities open at 3r.
std::optional<PhaseState> phase1_apply(
    const SupplierInstance& instance, const PhaseState& state, long long radius,
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& blocks);

struct DenseCluster {
  std::vector<std::size_t> clients;  // cluster minus previously taken clients
  std::vector<std::size_t> core;     // core minus previously taken facilities
  std::size_t seed_facility = 0;
};

struct DenseDecomposition {
  std::vector<DenseCluster> clusters;
  std::vector<std::size_t> dense_clients;     // C^d, sorted
  std::vector<std::size_t> dense_facilities;  // F^d, sorted
};

/// Splits off the dense part: repeatedly takes the lowest-indexed
/// 4-expensive facility whose r-ball still carries more than 2*tau weight in
/// the current color, together with its core and cluster.
DenseDecomposition dense_decomposition(const SupplierInstance& instance, const PhaseState& state,
                                       long long radius);

struct DenseSolution {
  std::vector<std::size_t> facilities;  // cheapest core facility per selected cluster
  long long cost = 0;
};

/// Covers the guessed dense targets at minimum cost by the cover DP over
/// clusters; the cheapest facility of each selected core opens at 5r.
std::optional<DenseSolution> solve_dense(const SupplierInstance& instance,
                                         const DenseDecomposition& dense,
                                         const std::vector<long long>& dense_targets);

/// Sparsified flower instance plus the selected vertex of its polytope.
/// Groups are pairwise disjoint and cover every client with positive
/// relaxation value; the lifted values dominate the relaxation pointwise;
/// the vertex has at most gamma fractional entries. All values are exact
/// rationals.
struct FlowerLpPoint {
  std::vector<std::size_t> representatives;      // client indices, pick order
  std::vector<std::vector<std::size_t>> groups;  // client indices per representative
  std::vector<long long> rep_cost;               // cheapest facility within r
  std::vector<Rational> z;                       // per representative, vertex values
  std::vector<Rational> lifted;                  // parallel to state.clients
};

/// Steps 1-4 of the sparse phase: exclusions, a feasible rational point of
/// the canonical relaxation, sparsification, and a min-cost vertex of the
/// flower polytope. Returns nullopt when the relaxation is empty or the
/// vertex costs more than the residual budget (an inconsistent guess).
std::optional<FlowerLpPoint> flower_lp_point(const SupplierInstance& instance,
                                             const PhaseState& state, long long radius);

struct SparseSolution {
  std::vector<std::size_t> facilities;  // opened at 7r
  std::size_t lp_fractionals = 0;
};

/// LP-rounding on the sparse residual: finds a feasible rational point of the
/// canonical relaxation with the exclusion constraints, sparsifies it into a
/// flower instance, takes a min-cost vertex of the flower polytope (at most
/// gamma fractional entries) and rounds. Returns nullopt when the guess is
/// inconsistent (empty polytope, missing cheap fallback facility, coverage
/// shortfall or budget overrun beyond the gamma*sigma slack).
std::optional<SparseSolution> solve_sparse(const SupplierInstance& instance,
                                           const PhaseState& state, long long radius);

struct Knapsack7Limits {
  // Enumeration nodes (guess prefixes) plus compositions, summed.
  unsigned long long max_nodes = 200'000'000ULL;
};

struct Knapsack7Result {
  SupplierSolution solution;
  long long radius_guess = 0;
  long long factor_bound = 7;
  unsigned long long guesses_tried = 0;  // compositions evaluated end to end
  long long sigma = 0;
  std::vector<long long> tau;
  std::size_t dense_clusters = 0;
  std::size_t lp_fractionals = 0;
};

/// The 7-approximation: for each candidate radius ascending, exhaustively
/// enumerates phase-0 and phase-1 guesses and dense targets, composes the
/// phases, and returns the first composition whose assembled solution is
/// feasible for the original instance at radius 7r. Throws GuessSpaceExceeded
/// when the enumeration outgrows the limits.
std::optional<Knapsack7Result> solve_knapsack7(const SupplierInstance& instance,
                                               const Knapsack7Limits& limits = {});

}  // namespace chroma

#endif  // CHROMA_KNAPSACK7_HPP

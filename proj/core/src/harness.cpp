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

#include "chroma/harness.hpp"

#include <algorithm>
#include <string>

#include "chroma/core.hpp"
#include "chroma/errors.hpp"
#include "chroma/rng.hpp"

namespace chroma {

std::optional<BruteForceOptimum> brute_force_optimal(const SupplierInstance& instance) {
  const ColorfulSpace& space = instance.space;
  if (space.num_facilities() > 20)
    throw SizeLimitExceeded("brute_force_optimal supports at most 20 facilities");

  std::optional<BruteForceOptimum> best;
  for (std::uint64_t mask = 0; mask < (1ULL << space.num_facilities()); ++mask) {
    std::vector<std::size_t> centers;
    for (std::size_t f = 0; f < space.num_facilities(); ++f) {
      if (mask & (1ULL << f)) centers.push_back(f);
    }
    if (!instance.constraint.allows(centers)) continue;

    // Smallest radius at which this subset meets every requirement: sweep the
    // clients by their distance to the nearest chosen center.
    std::vector<std::pair<long long, std::size_t>> by_dist;
    for (std::size_t c = 0; c < space.num_clients(); ++c) {
      long long dmin = -1;
      for (std::size_t f : centers) {
        long long d = space.client_facility_dist(c, f);
        if (dmin < 0 || d < dmin) dmin = d;
      }
      if (dmin >= 0) by_dist.emplace_back(dmin, c);
    }
    std::sort(by_dist.begin(), by_dist.end());

    std::vector<long long> covered(space.gamma, 0);
    auto met = [&]() {
      for (int l = 0; l < space.gamma; ++l) {
        if (covered[l] < instance.requirements[l]) return false;
      }
      return true;
    };
    long long needed = -1;
    if (met()) {
      needed = 0;
    } else {
      for (std::size_t i = 0; i < by_dist.size() && needed < 0; ++i) {
        for (int l = 0; l < space.gamma; ++l) covered[l] += space.weights[l][by_dist[i].second];
        // Only close the radius at the last client of a tied distance group.
        if (i + 1 < by_dist.size() && by_dist[i + 1].first == by_dist[i].first) continue;
        if (met()) needed = by_dist[i].first;
      }
    }
    if (needed < 0) continue;

    if (!best.has_value() || needed < best->radius ||
        (needed == best->radius &&
         (centers.size() < best->centers.size() ||
          (centers.size() == best->centers.size() &&
           std::lexicographical_compare(centers.begin(), centers.end(), best->centers.begin(),
                                        best->centers.end()))))) {
      best = BruteForceOptimum{centers, needed};
    }
  }
  return best;
}

SupplierInstance generate_instance(const GenParams& params) {
  Rng rng(params.seed);
  SupplierInstance inst;
  ColorfulSpace& space = inst.space;
  space.gamma = params.gamma;

  std::vector<long long> positions;
  for (std::size_t c = 0; c < params.n_clients; ++c) {
    space.clients.push_back("c" + std::to_string(c));
    positions.push_back(rng.between(0, params.max_dist));
  }
  for (std::size_t f = 0; f < params.n_facilities; ++f) {
    space.facilities.push_back("f" + std::to_string(f));
    positions.push_back(rng.between(0, params.max_dist));
  }
  std::size_t n = space.num_points();
  space.dist.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      space.dist[a * n + b] = std::abs(positions[a] - positions[b]);
    }
  }

  space.weights.assign(params.gamma, std::vector<long long>(params.n_clients, 0));
  for (std::size_t c = 0; c < params.n_clients; ++c) {
    if (params.gamma == 0) break;
    // Uniform color or uncolored; at most one color per client keeps the
    // supports disjoint by construction.
    std::uint64_t pick = rng.below(static_cast<std::uint64_t>(params.gamma) + 1);
    if (pick < static_cast<std::uint64_t>(params.gamma)) {
      space.weights[pick][c] = rng.between(0, params.weight_max);
    }
  }

  std::vector<std::size_t> feasible_subset;
  if (params.constraint_kind == GenParams::Kind::Knapsack) {
    KnapsackConstraint knapsack;
    for (std::size_t f = 0; f < params.n_facilities; ++f) {
      knapsack.costs.push_back(rng.between(0, params.cost_max));
    }
    for (std::size_t f = 0; f < params.n_facilities; ++f) {
      if (rng.coin()) feasible_subset.push_back(f);
    }
    if (feasible_subset.empty() && params.n_facilities > 0) {
      feasible_subset.push_back(
          static_cast<std::size_t>(rng.below(params.n_facilities)));
    }
    knapsack.budget = knapsack.cost_of(feasible_subset);
    inst.constraint.value = std::move(knapsack);
  } else {
    LinearMatroidConstraint matroid;
    matroid.prime = params.prime;
    std::size_t rank = params.matroid_rank;
    for (;;) {
      matroid.columns.assign(params.n_facilities, std::vector<long long>(rank, 0));
      for (auto& col : matroid.columns) {
        for (auto& e : col) e = static_cast<long long>(rng.below(static_cast<std::uint64_t>(params.prime)));
      }
      if (params.n_facilities == 0 || rank == 0) break;
      PrimeFieldMatrix mat(params.prime, rank, params.n_facilities);
      for (std::size_t f = 0; f < params.n_facilities; ++f) {
        for (std::size_t r = 0; r < rank; ++r) mat.at(r, f) = matroid.columns[f][r];
      }
      if (matrix_rank(mat) >= 1) break;
    }
    // A random independent subset serves as the witness of feasibility.
    FacilityConstraint probe;
    probe.value = matroid;
    std::vector<std::size_t> order(params.n_facilities);
    for (std::size_t f = 0; f < params.n_facilities; ++f) order[f] = f;
    for (std::size_t f = params.n_facilities; f > 1; --f) {
      std::swap(order[f - 1], order[rng.below(f)]);
    }
    for (std::size_t f : order) {
      if (!rng.coin()) continue;
      std::vector<std::size_t> tentative = feasible_subset;
      tentative.push_back(f);
      std::sort(tentative.begin(), tentative.end());
      if (probe.allows(tentative)) feasible_subset = tentative;
    }
    if (feasible_subset.empty()) {
      for (std::size_t f = 0; f < params.n_facilities; ++f) {
        std::vector<std::size_t> single{f};
        if (probe.allows(single)) {
          feasible_subset = single;
          break;
        }
      }
    }
    inst.constraint.value = std::move(matroid);
  }

  // Requirements land in the upper half of what the witness subset covers at
  // a radius from the upper half of the candidates; this keeps instances
  // feasible by construction while avoiding mostly-vacuous requirements.
  std::vector<long long> candidates = radius_candidates(space);
  long long sample_radius = 0;
  if (!candidates.empty()) {
    std::size_t lower = candidates.size() / 2;
    sample_radius = candidates[lower + rng.below(candidates.size() - lower)];
  }
  std::vector<long long> achievable = coverage(space, feasible_subset, sample_radius);
  inst.requirements.assign(params.gamma, 0);
  for (int l = 0; l < params.gamma; ++l) {
    inst.requirements[l] = rng.between((achievable[l] + 1) / 2, achievable[l]);
  }
  return inst;
}

SupplierInstance xwb_to_colorful(const XwbInstance& xwb, long long separation) {
  const std::size_t n = xwb.matrix.cols;
  long long max_weight = 0;
  for (long long w : xwb.weights) max_weight = std::max(max_weight, w);
  long long rank = static_cast<long long>(matrix_rank(xwb.matrix));

  SupplierInstance inst;
  ColorfulSpace& space = inst.space;
  space.gamma = 2;
  space.weights.assign(2, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    space.clients.push_back("c" + std::to_string(i));
    space.facilities.push_back("f" + std::to_string(i));
    space.weights[0][i] = xwb.weights[i];
    space.weights[1][i] = max_weight - xwb.weights[i];
  }
  // Element i sits at position i * separation; its client and facility are
  // co-located.
  std::size_t points = 2 * n;
  space.dist.assign(points * points, 0);
  auto position = [&](std::size_t p) { return static_cast<long long>(p % n) * separation; };
  for (std::size_t a = 0; a < points; ++a) {
    for (std::size_t b = 0; b < points; ++b) {
      space.dist[a * points + b] = std::abs(position(a) - position(b));
    }
  }

  inst.requirements = {xwb.target, std::max(0LL, rank * max_weight - xwb.target)};

  LinearMatroidConstraint matroid;
  matroid.prime = xwb.matrix.prime;
  for (std::size_t i = 0; i < n; ++i) matroid.columns.push_back(xwb.matrix.column(i));
  inst.constraint.value = std::move(matroid);
  return inst;
}

}  // namespace chroma

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

#include "chroma/knapsack7.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "chroma/core.hpp"
#include "chroma/cover_dp.hpp"
#include "chroma/errors.hpp"
#include "chroma/simplex.hpp"

namespace chroma {

namespace {

bool sorted_contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<long long> weight_of_clients(const ColorfulSpace& space,
                                         const std::vector<std::size_t>& clients) {
  std::vector<long long> w(space.gamma, 0);
  for (std::size_t c : clients) {
    for (int l = 0; l < space.gamma; ++l) w[l] += space.weights[l][c];
  }
  return w;
}

std::vector<std::size_t> clients_within(const ColorfulSpace& space,
                                        const std::vector<std::size_t>& clients,
                                        const std::vector<std::size_t>& centers,
                                        long long radius) {
  std::vector<std::size_t> inside;
  for (std::size_t c : clients) {
    for (std::size_t f : centers) {
      if (space.client_facility_dist(c, f) <= radius) {
        inside.push_back(c);
        break;
      }
    }
  }
  return inside;
}

std::vector<long long> floored_minus(const std::vector<long long>& m,
                                     const std::vector<long long>& sub) {
  std::vector<long long> out(m.size());
  for (std::size_t l = 0; l < m.size(); ++l) out[l] = std::max(0LL, m[l] - sub[l]);
  return out;
}

}  // namespace

FlowerGain flower_gain(const ColorfulSpace& space, const std::vector<std::size_t>& clients,
                       const std::vector<std::size_t>& facilities, std::size_t facility,
                       std::size_t client, long long radius) {
  if (space.client_facility_dist(client, facility) > radius)
    throw FacilityTooFar(facility, client);
  std::vector<std::size_t> nearby;
  for (std::size_t g : facilities) {
    if (space.client_facility_dist(client, g) <= radius) nearby.push_back(g);
  }
  FlowerGain out;
  out.gains.assign(space.gamma, 0);
  for (std::size_t b : clients) {
    bool in_flower = false;
    for (std::size_t g : nearby) {
      if (space.client_facility_dist(b, g) <= radius) {
        in_flower = true;
        break;
      }
    }
    if (!in_flower) continue;
    out.flower.push_back(b);
    if (space.client_facility_dist(b, facility) > radius) {
      for (int l = 0; l < space.gamma; ++l) out.gains[l] += space.weights[l][b];
    }
  }
  return out;
}

FlowerGain flower_gain(const ColorfulSpace& space, std::size_t facility, std::size_t client,
                       long long radius) {
  std::vector<std::size_t> clients(space.num_clients());
  std::vector<std::size_t> facilities(space.num_facilities());
  for (std::size_t c = 0; c < clients.size(); ++c) clients[c] = c;
  for (std::size_t f = 0; f < facilities.size(); ++f) facilities[f] = f;
  return flower_gain(space, clients, facilities, facility, client, radius);
}

std::optional<PhaseState> phase0_apply(
    const SupplierInstance& instance, long long radius,
    const std::vector<std::pair<std::size_t, std::size_t>>& guess) {
  const ColorfulSpace& space = instance.space;
  const auto& knapsack = instance.constraint.knapsack();
  const std::size_t gamma = static_cast<std::size_t>(space.gamma);
  if (guess.size() > gamma)
    throw InconsistentGuess("phase 0 allows at most gamma pairs");

  std::vector<char> removed(space.num_facilities(), 0);
  std::vector<std::size_t> s_kappa, expensive;
  for (const auto& [e, s] : guess) {
    if (e >= space.num_facilities() || s >= space.num_facilities() || e == s)
      throw InconsistentGuess("phase 0 pair must name two distinct facilities");
    if (removed[e] || removed[s])
      throw InconsistentGuess("phase 0 pair reuses a removed facility");
    if (space.facility_facility_dist(e, s) > 4 * radius)
      throw InconsistentGuess("phase 0 pair is well-separated");
    s_kappa.push_back(s);
    expensive.push_back(e);
    for (std::size_t g = 0; g < space.num_facilities(); ++g) {
      if (space.facility_facility_dist(s, g) <= 4 * radius) removed[g] = 1;
    }
  }

  long long sigma = 0;
  if (gamma > 0 && guess.size() == gamma) {
    sigma = knapsack.costs[expensive.front()];
    for (std::size_t e : expensive) sigma = std::min(sigma, knapsack.costs[e]);
  }

  PhaseState state;
  state.budget = knapsack.budget - knapsack.cost_of(s_kappa) -
                 static_cast<long long>(gamma) * sigma;
  if (state.budget < 0) return std::nullopt;
  state.sigma = sigma;
  state.tau.assign(gamma, 0);
  state.s_kappa = s_kappa;
  std::sort(state.s_kappa.begin(), state.s_kappa.end());
  state.expensive_guess = expensive;
  std::sort(state.expensive_guess.begin(), state.expensive_guess.end());
  for (std::size_t f = 0; f < space.num_facilities(); ++f) {
    if (removed[f]) state.removed_region.push_back(f);
    else state.facilities.push_back(f);
  }

  std::vector<std::size_t> taken;
  for (std::size_t c = 0; c < space.num_clients(); ++c) {
    bool near = false;
    for (std::size_t s : s_kappa) {
      if (space.client_facility_dist(c, s) <= 5 * radius) {
        near = true;
        break;
      }
    }
    if (near) taken.push_back(c);
    else state.clients.push_back(c);
  }
  state.requirements = floored_minus(instance.requirements, weight_of_clients(space, taken));
  return state;
}

std::optional<PhaseState> phase1_apply(
    const SupplierInstance& instance, const PhaseState& state, long long radius,
    const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& blocks) {
  const ColorfulSpace& space = instance.space;
  const auto& knapsack = instance.constraint.knapsack();
  const std::size_t gamma = static_cast<std::size_t>(space.gamma);
  if (blocks.size() != gamma)
    throw InconsistentGuess("phase 1 needs one block per color");
  const std::size_t full_block = 3 * gamma + 1;

  std::vector<std::size_t> s_w;
  std::vector<long long> tau(gamma, 0);
  for (std::size_t l = 0; l < gamma; ++l) {
    const auto& block = blocks[l];
    if (block.size() > full_block)
      throw InconsistentGuess("phase 1 block longer than 3*gamma+1");
    for (const auto& [f, c] : block) {
      if (!sorted_contains(state.facilities, f))
        throw InconsistentGuess("phase 1 facility not in the residual instance");
      if (knapsack.costs[f] <= state.sigma)
        throw InconsistentGuess("phase 1 facility is not expensive");
      if (std::find(s_w.begin(), s_w.end(), f) != s_w.end())
        throw InconsistentGuess("phase 1 facility guessed twice");
      if (!sorted_contains(state.clients, c))
        throw InconsistentGuess("phase 1 client not in the residual instance");
      if (space.client_facility_dist(c, f) > radius)
        throw InconsistentGuess("phase 1 pair is farther than r apart");
      s_w.push_back(f);
    }
    if (block.size() == full_block) {
      // tau is the gain recorded by the final guess of the block.
      const auto& [f, c] = block.back();
      tau[l] = flower_gain(space, state.clients, state.facilities, f, c, radius).gains[l];
    }
  }

  PhaseState next;
  next.budget = state.budget - knapsack.cost_of(s_w);
  if (next.budget < 0) return std::nullopt;
  next.sigma = state.sigma;
  next.tau = tau;
  next.s_kappa = state.s_kappa;
  next.expensive_guess = state.expensive_guess;
  next.removed_region = state.removed_region;
  next.s_w = s_w;
  std::sort(next.s_w.begin(), next.s_w.end());

  std::vector<std::size_t> covered_r = clients_within(space, state.clients, s_w, radius);
  next.requirements = floored_minus(state.requirements, weight_of_clients(space, covered_r));
  std::vector<std::size_t> covered_3r = clients_within(space, state.clients, s_w, 3 * radius);
  for (std::size_t c : state.clients) {
    if (!std::binary_search(covered_3r.begin(), covered_3r.end(), c)) next.clients.push_back(c);
  }
  for (std::size_t f : state.facilities) {
    if (!std::binary_search(next.s_w.begin(), next.s_w.end(), f)) next.facilities.push_back(f);
  }
  return next;
}

namespace {

// Expensive set and 4-expensive subset relative to a residual facility set.
struct ExpensiveSets {
  std::vector<char> expensive;       // indexed by original facility id
  std::vector<char> four_expensive;  // indexed by original facility id
};

ExpensiveSets expensive_sets(const SupplierInstance& instance, const PhaseState& state,
                             long long radius) {
  const ColorfulSpace& space = instance.space;
  const auto& costs = instance.constraint.knapsack().costs;
  ExpensiveSets out;
  out.expensive.assign(space.num_facilities(), 0);
  out.four_expensive.assign(space.num_facilities(), 0);
  for (std::size_t f : state.facilities) out.expensive[f] = costs[f] > state.sigma;
  for (std::size_t f : state.facilities) {
    if (!out.expensive[f]) continue;
    bool all = true;
    for (std::size_t g : state.facilities) {
      if (space.facility_facility_dist(f, g) <= 4 * radius && !out.expensive[g]) {
        all = false;
        break;
      }
    }
    out.four_expensive[f] = all;
  }
  return out;
}

}  // namespace

DenseDecomposition dense_decomposition(const SupplierInstance& instance, const PhaseState& state,
                                       long long radius) {
  const ColorfulSpace& space = instance.space;
  ExpensiveSets sets = expensive_sets(instance, state, radius);

  DenseDecomposition out;
  std::vector<char> taken_client(space.num_clients(), 0);
  std::vector<char> taken_facility(space.num_facilities(), 0);

  for (int l = 0; l < space.gamma; ++l) {
    for (;;) {
      // Lowest-indexed 4-expensive facility still dense on the untaken
      // clients with respect to color l.
      std::size_t dense_f = space.num_facilities();
      for (std::size_t f : state.facilities) {
        if (!sets.four_expensive[f]) continue;
        long long ball = 0;
        for (std::size_t c : state.clients) {
          if (!taken_client[c] && space.client_facility_dist(c, f) <= radius)
            ball += space.weights[l][c];
        }
        if (ball > 2 * state.tau[l]) {
          dense_f = f;
          break;
        }
      }
      if (dense_f == space.num_facilities()) break;

      std::vector<std::size_t> core;
      for (std::size_t g : state.facilities) {
        bool heavy = false;
        for (int lb = 0; lb < space.gamma && !heavy; ++lb) {
          long long overlap = 0;
          for (std::size_t c : state.clients) {
            if (space.client_facility_dist(c, g) <= radius &&
                space.client_facility_dist(c, dense_f) <= radius)
              overlap += space.weights[lb][c];
          }
          heavy = overlap > state.tau[lb];
        }
        if (heavy) core.push_back(g);
      }
      std::vector<std::size_t> cluster = clients_within(space, state.clients, core, radius);

      DenseCluster entry;
      entry.seed_facility = dense_f;
      for (std::size_t c : cluster) {
        if (!taken_client[c]) entry.clients.push_back(c);
      }
      for (std::size_t g : core) {
        if (!taken_facility[g]) entry.core.push_back(g);
      }
      assert(!entry.core.empty());
      for (std::size_t c : cluster) taken_client[c] = 1;
      for (std::size_t g : core) taken_facility[g] = 1;
      out.clusters.push_back(std::move(entry));
    }
  }
  for (std::size_t c : state.clients) {
    if (taken_client[c]) out.dense_clients.push_back(c);
  }
  for (std::size_t f : state.facilities) {
    if (taken_facility[f]) out.dense_facilities.push_back(f);
  }
  return out;
}

std::optional<DenseSolution> solve_dense(const SupplierInstance& instance,
                                         const DenseDecomposition& dense,
                                         const std::vector<long long>& dense_targets) {
  const ColorfulSpace& space = instance.space;
  const auto& costs = instance.constraint.knapsack().costs;

  std::vector<std::vector<long long>> weights(space.gamma,
                                              std::vector<long long>(dense.clusters.size(), 0));
  std::vector<long long> eta(dense.clusters.size(), kUnusable);
  std::vector<std::size_t> opener(dense.clusters.size(), 0);
  for (std::size_t u = 0; u < dense.clusters.size(); ++u) {
    std::vector<long long> w = weight_of_clients(space, dense.clusters[u].clients);
    for (int l = 0; l < space.gamma; ++l) weights[l][u] = w[l];
    for (std::size_t g : dense.clusters[u].core) {
      if (costs[g] < eta[u]) {
        eta[u] = costs[g];
        opener[u] = g;  // lowest id wins ties because core is ascending
      }
    }
  }

  std::optional<CoverDpResult> dp = min_cost_cover(weights, eta, dense_targets);
  if (!dp.has_value()) return std::nullopt;
  DenseSolution sol;
  sol.cost = dp->cost;
  for (std::size_t u : dp->chosen) sol.facilities.push_back(opener[u]);
  std::sort(sol.facilities.begin(), sol.facilities.end());
  return sol;
}

std::optional<FlowerLpPoint> flower_lp_point(const SupplierInstance& instance,
                                             const PhaseState& state, long long radius) {
  const ColorfulSpace& space = instance.space;
  const auto& costs = instance.constraint.knapsack().costs;
  const std::size_t gamma = static_cast<std::size_t>(space.gamma);
  ExpensiveSets sets = expensive_sets(instance, state, radius);

  const std::size_t nc = state.clients.size();
  const std::size_t nf = state.facilities.size();

  std::vector<std::vector<std::size_t>> near(nc);  // facility positions within r per client
  for (std::size_t i = 0; i < nc; ++i) {
    for (std::size_t j = 0; j < nf; ++j) {
      if (space.client_facility_dist(state.clients[i], state.facilities[j]) <= radius)
        near[i].push_back(j);
    }
  }

  auto flower_of = [&](std::size_t i) {
    std::vector<std::size_t> flower;  // client positions
    for (std::size_t b = 0; b < nc; ++b) {
      for (std::size_t j : near[i]) {
        if (space.client_facility_dist(state.clients[b], state.facilities[j]) <= radius) {
          flower.push_back(b);
          break;
        }
      }
    }
    return flower;
  };

  // Exclusion rule: clients surrounded only by 4-expensive facilities whose
  // flower is too heavy cannot be covered by the remaining optimum.
  std::vector<char> excluded(nc, 0);
  for (std::size_t i = 0; i < nc; ++i) {
    bool all_e4 = true;
    for (std::size_t j : near[i]) all_e4 = all_e4 && sets.four_expensive[state.facilities[j]];
    if (!all_e4) continue;
    std::vector<long long> flower_weight(gamma, 0);
    for (std::size_t b : flower_of(i)) {
      for (std::size_t l = 0; l < gamma; ++l)
        flower_weight[l] += space.weights[l][state.clients[b]];
    }
    for (std::size_t l = 0; l < gamma; ++l) {
      if (flower_weight[l] > 3 * state.tau[l]) excluded[i] = 1;
    }
  }

  // Canonical relaxation P with the exclusions, feasibility only.
  LinearProgram relax;
  relax.num_vars = nc + nf;
  relax.objective.assign(relax.num_vars, Rational(0));
  relax.upper_bounds.assign(relax.num_vars, Rational(1));
  for (std::size_t i = 0; i < nc; ++i) {
    if (excluded[i]) relax.upper_bounds[i] = Rational(0);
  }
  {
    LpConstraint budget;
    budget.coeffs.assign(relax.num_vars, Rational(0));
    for (std::size_t j = 0; j < nf; ++j) budget.coeffs[nc + j] = to_rational(costs[state.facilities[j]]);
    budget.relation = Relation::LessEq;
    budget.rhs = to_rational(state.budget);
    relax.constraints.push_back(std::move(budget));
  }
  for (std::size_t i = 0; i < nc; ++i) {
    LpConstraint row;
    row.coeffs.assign(relax.num_vars, Rational(0));
    row.coeffs[i] = 1;
    for (std::size_t j : near[i]) row.coeffs[nc + j] = -1;
    row.relation = Relation::LessEq;
    row.rhs = 0;
    relax.constraints.push_back(std::move(row));
  }
  for (std::size_t l = 0; l < gamma; ++l) {
    LpConstraint row;
    row.coeffs.assign(relax.num_vars, Rational(0));
    for (std::size_t i = 0; i < nc; ++i) row.coeffs[i] = to_rational(space.weights[l][state.clients[i]]);
    row.relation = Relation::GreaterEq;
    row.rhs = to_rational(state.requirements[l]);
    relax.constraints.push_back(std::move(row));
  }
  LpResult point = solve_lp(relax);
  if (point.status != LpStatus::Optimal) return std::nullopt;

  // Sparsification into a flower instance: repeatedly take the client with
  // the largest x value, cut its flower out and lift x on it.
  FlowerLpPoint out;
  out.lifted.assign(nc, Rational(0));
  std::vector<char> alive(nc, 1);
  for (;;) {
    std::size_t best = nc;
    for (std::size_t i = 0; i < nc; ++i) {
      if (alive[i] && sgn(point.x[i]) > 0 && (best == nc || point.x[i] > point.x[best])) best = i;
    }
    if (best == nc) break;
    Rational lift = point.x[best];
    std::vector<std::size_t> group;
    for (std::size_t b : flower_of(best)) {
      if (alive[b]) {
        group.push_back(state.clients[b]);
        alive[b] = 0;
        out.lifted[b] = lift;
        assert(lift >= point.x[b]);  // lifted value dominates
      }
    }
    assert(!group.empty());
    out.representatives.push_back(state.clients[best]);
    out.groups.push_back(std::move(group));
  }

  // Min-cost vertex of the flower polytope; the budget row is dropped, so a
  // basic optimum has at most gamma fractional entries, and the optimum
  // exceeding the budget certifies the polytope is empty.
  const std::size_t num_reps = out.representatives.size();
  LinearProgram flower_lp;
  flower_lp.num_vars = num_reps;
  flower_lp.objective.assign(num_reps, Rational(0));
  flower_lp.upper_bounds.assign(num_reps, Rational(1));
  for (std::size_t q = 0; q < num_reps; ++q) {
    long long best_cost = -1;
    for (std::size_t f : state.facilities) {
      if (space.client_facility_dist(out.representatives[q], f) > radius) continue;
      if (best_cost < 0 || costs[f] < best_cost) best_cost = costs[f];
    }
    assert(best_cost >= 0);  // x > 0 forces y support within r
    out.rep_cost.push_back(best_cost);
    flower_lp.objective[q] = to_rational(best_cost);
  }
  for (std::size_t l = 0; l < gamma; ++l) {
    LpConstraint row;
    row.coeffs.assign(num_reps, Rational(0));
    for (std::size_t q = 0; q < num_reps; ++q) {
      long long group_weight = 0;
      for (std::size_t b : out.groups[q]) group_weight += space.weights[l][b];
      row.coeffs[q] = to_rational(group_weight);
    }
    row.relation = Relation::GreaterEq;
    row.rhs = to_rational(state.requirements[l]);
    flower_lp.constraints.push_back(std::move(row));
  }
  LpResult vertex = solve_lp(flower_lp);
  if (vertex.status != LpStatus::Optimal) return std::nullopt;
  if (vertex.objective > to_rational(state.budget)) return std::nullopt;
  out.z = vertex.x;

  std::size_t fractional = 0;
  for (const Rational& z : out.z) {
    if (sgn(z) != 0 && z != 1) ++fractional;
  }
  assert(fractional <= gamma);
  (void)fractional;
  return out;
}

std::optional<SparseSolution> solve_sparse(const SupplierInstance& instance,
                                           const PhaseState& state, long long radius) {
  const ColorfulSpace& space = instance.space;
  const auto& costs = instance.constraint.knapsack().costs;
  const std::size_t gamma = static_cast<std::size_t>(space.gamma);
  ExpensiveSets sets = expensive_sets(instance, state, radius);

  std::optional<FlowerLpPoint> point = flower_lp_point(instance, state, radius);
  if (!point.has_value()) return std::nullopt;

  SparseSolution sol;
  std::vector<std::size_t> opened;
  for (std::size_t q = 0; q < point->representatives.size(); ++q) {
    const Rational& z = point->z[q];
    std::size_t c = point->representatives[q];
    if (sgn(z) == 0) continue;
    if (z == 1) {
      // Cheapest facility within r, lowest id on ties.
      std::size_t cheapest = space.num_facilities();
      for (std::size_t f : state.facilities) {
        if (space.client_facility_dist(c, f) > radius) continue;
        if (cheapest == space.num_facilities() || costs[f] < costs[cheapest]) cheapest = f;
      }
      assert(cheapest < space.num_facilities());
      opened.push_back(cheapest);
      continue;
    }
    ++sol.lp_fractionals;
    bool all_e4 = true;
    for (std::size_t f : state.facilities) {
      if (space.client_facility_dist(c, f) <= radius)
        all_e4 = all_e4 && sets.four_expensive[f];
    }
    if (all_e4) continue;  // dropped; the tau accounting absorbs the loss
    std::size_t fallback = space.num_facilities();
    for (std::size_t f : state.facilities) {
      if (!sets.expensive[f] && space.client_facility_dist(c, f) <= 5 * radius) {
        fallback = f;
        break;
      }
    }
    if (fallback == space.num_facilities()) return std::nullopt;
    opened.push_back(fallback);
  }

  std::sort(opened.begin(), opened.end());
  opened.erase(std::unique(opened.begin(), opened.end()), opened.end());

  long long opened_cost = 0;
  for (std::size_t f : opened) opened_cost += costs[f];
  if (opened_cost > state.budget + static_cast<long long>(gamma) * state.sigma)
    return std::nullopt;
  std::vector<std::size_t> covered = clients_within(space, state.clients, opened, 7 * radius);
  std::vector<long long> got = weight_of_clients(space, covered);
  for (std::size_t l = 0; l < gamma; ++l) {
    long long need = std::max(0LL, state.requirements[l] -
                                       3 * static_cast<long long>(gamma) * state.tau[l]);
    if (got[l] < need) return std::nullopt;
  }
  sol.facilities = std::move(opened);
  return sol;
}

namespace {

struct Enumerator {
  const SupplierInstance& instance;
  long long radius;
  const Knapsack7Limits& limits;
  unsigned long long nodes = 0;
  unsigned long long compositions = 0;

  void count_node() {
    if (++nodes > limits.max_nodes)
      throw GuessSpaceExceeded("knapsack7 enumeration exceeded " +
                               std::to_string(limits.max_nodes) + " nodes");
  }

  std::optional<Knapsack7Result> run() {
    const ColorfulSpace& space = instance.space;
    const std::size_t gamma = static_cast<std::size_t>(space.gamma);

    // Phase 0: all consistent pair sequences, stop-first, pairs ascending.
    std::vector<PhaseState> states0;
    std::map<std::pair<std::vector<std::size_t>, long long>, bool> seen0;
    std::vector<std::pair<std::size_t, std::size_t>> seq;
    std::vector<char> removed(space.num_facilities(), 0);

    auto emit0 = [&](const std::vector<std::pair<std::size_t, std::size_t>>& guess) {
      count_node();
      std::optional<PhaseState> state = phase0_apply(instance, radius, guess);
      if (!state.has_value()) return;
      auto key = std::make_pair(state->s_kappa, state->sigma);
      if (!seen0.emplace(key, true).second) return;
      states0.push_back(std::move(*state));
    };

    auto dfs0 = [&](auto&& self, std::size_t depth) -> void {
      emit0(seq);
      if (depth == gamma) return;
      for (std::size_t e = 0; e < space.num_facilities(); ++e) {
        if (removed[e]) continue;
        for (std::size_t s = 0; s < space.num_facilities(); ++s) {
          if (s == e || removed[s]) continue;
          if (space.facility_facility_dist(e, s) > 4 * radius) continue;
          std::vector<std::size_t> newly;
          for (std::size_t g = 0; g < space.num_facilities(); ++g) {
            if (!removed[g] && space.facility_facility_dist(s, g) <= 4 * radius) {
              removed[g] = 1;
              newly.push_back(g);
            }
          }
          seq.emplace_back(e, s);
          self(self, depth + 1);
          seq.pop_back();
          for (std::size_t g : newly) removed[g] = 0;
        }
      }
    };
    dfs0(dfs0, 0);

    for (const PhaseState& state0 : states0) {
      std::optional<Knapsack7Result> result = run_phase1(state0);
      if (result.has_value()) return result;
    }
    return std::nullopt;
  }

  std::optional<Knapsack7Result> run_phase1(const PhaseState& state0) {
    const ColorfulSpace& space = instance.space;
    const auto& costs = instance.constraint.knapsack().costs;
    const std::size_t gamma = static_cast<std::size_t>(space.gamma);
    const std::size_t full_block = 3 * gamma + 1;

    std::vector<std::size_t> expensive;
    for (std::size_t f : state0.facilities) {
      if (costs[f] > state0.sigma) expensive.push_back(f);
    }

    std::vector<PhaseState> states1;
    std::map<std::pair<std::vector<std::size_t>, std::vector<long long>>, bool> seen1;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> blocks(gamma);
    std::vector<char> used(space.num_facilities(), 0);

    auto emit1 = [&]() {
      count_node();
      std::optional<PhaseState> state = phase1_apply(instance, state0, radius, blocks);
      if (!state.has_value()) return;
      auto key = std::make_pair(state->s_w, state->tau);
      if (!seen1.emplace(key, true).second) return;
      states1.push_back(std::move(*state));
    };

    auto dfs1 = [&](auto&& self, std::size_t color, std::size_t depth) -> void {
      count_node();
      if (color == gamma) {
        emit1();
        return;
      }
      // Stopping the block early is always a legitimate guess ("the optimum
      // has no further expensive facility here"); a full block must move on.
      self(self, color + 1, 0);
      if (depth == full_block) return;
      for (std::size_t f : expensive) {
        if (used[f]) continue;
        for (std::size_t c : state0.clients) {
          if (space.client_facility_dist(c, f) > radius) continue;
          used[f] = 1;
          blocks[color].emplace_back(f, c);
          self(self, color, depth + 1);
          blocks[color].pop_back();
          used[f] = 0;
        }
      }
    };

    dfs1(dfs1, 0, 0);

    for (const PhaseState& state1 : states1) {
      std::optional<Knapsack7Result> result = run_dense_sparse(state1);
      if (result.has_value()) return result;
    }
    return std::nullopt;
  }

  std::optional<Knapsack7Result> run_dense_sparse(const PhaseState& state1) {
    const std::size_t gamma = static_cast<std::size_t>(instance.space.gamma);

    DenseDecomposition dense = dense_decomposition(instance, state1, radius);
    std::map<std::vector<std::size_t>, bool> seen_dense;

    std::vector<long long> targets(gamma, 0);
    for (;;) {
      count_node();
      std::optional<DenseSolution> dense_sol = solve_dense(instance, dense, targets);
      if (dense_sol.has_value() && seen_dense.emplace(dense_sol->facilities, true).second) {
        std::optional<Knapsack7Result> result =
            try_composition(state1, dense, *dense_sol);
        if (result.has_value()) return result;
      }

      // Ascending odometer over the dense targets, last color fastest.
      std::size_t l = gamma;
      while (l-- > 0) {
        if (targets[l] < state1.requirements[l]) {
          ++targets[l];
          break;
        }
        targets[l] = 0;
        if (l == 0) return std::nullopt;
      }
      if (gamma == 0) return std::nullopt;
    }
  }

  std::optional<Knapsack7Result> try_composition(const PhaseState& state1,
                                                 const DenseDecomposition& dense,
                                                 const DenseSolution& dense_sol) {
    const ColorfulSpace& space = instance.space;
    ++compositions;
    count_node();

    PhaseState sparse = state1;
    sparse.budget = state1.budget - dense_sol.cost;
    if (sparse.budget < 0) return std::nullopt;
    sparse.clients.clear();
    for (std::size_t c : state1.clients) {
      if (!std::binary_search(dense.dense_clients.begin(), dense.dense_clients.end(), c))
        sparse.clients.push_back(c);
    }
    sparse.facilities.clear();
    for (std::size_t f : state1.facilities) {
      if (!std::binary_search(dense.dense_facilities.begin(), dense.dense_facilities.end(), f))
        sparse.facilities.push_back(f);
    }
    std::vector<std::size_t> dense_covered =
        clients_within(space, dense.dense_clients, dense_sol.facilities, 5 * radius);
    sparse.requirements =
        floored_minus(state1.requirements, weight_of_clients(space, dense_covered));

    std::optional<SparseSolution> sparse_sol = solve_sparse(instance, sparse, radius);
    if (!sparse_sol.has_value()) return std::nullopt;

    std::vector<std::size_t> centers = state1.s_kappa;
    centers.insert(centers.end(), state1.s_w.begin(), state1.s_w.end());
    centers.insert(centers.end(), dense_sol.facilities.begin(), dense_sol.facilities.end());
    centers.insert(centers.end(), sparse_sol->facilities.begin(), sparse_sol->facilities.end());
    SupplierSolution candidate = check_solution(instance, centers, 7 * radius);
    if (!candidate.feasible) return std::nullopt;

    Knapsack7Result result;
    result.solution = std::move(candidate);
    result.radius_guess = radius;
    result.sigma = state1.sigma;
    result.tau = state1.tau;
    result.dense_clusters = dense.clusters.size();
    result.lp_fractionals = sparse_sol->lp_fractionals;
    return result;
  }
};

}  // namespace

std::optional<Knapsack7Result> solve_knapsack7(const SupplierInstance& instance,
                                               const Knapsack7Limits& limits) {
  if (!instance.constraint.is_knapsack())
    throw std::invalid_argument("solve_knapsack7 requires a knapsack constraint");

  // Nothing to cover: the empty set at radius zero is optimal, which no
  // positive candidate distance could certify.
  SupplierSolution degenerate = check_solution(instance, {}, 0);
  if (degenerate.feasible) {
    Knapsack7Result result;
    result.solution = std::move(degenerate);
    result.radius_guess = 0;
    result.tau.assign(instance.space.gamma, 0);
    return result;
  }

  std::vector<long long> candidates = radius_candidates(instance.space);
  if (candidates.empty()) candidates.push_back(0);

  unsigned long long nodes_so_far = 0;
  unsigned long long compositions_so_far = 0;
  for (long long r : candidates) {
    Enumerator enumerator{instance, r, limits};
    enumerator.nodes = nodes_so_far;
    enumerator.compositions = compositions_so_far;
    std::optional<Knapsack7Result> result = enumerator.run();
    nodes_so_far = enumerator.nodes;
    compositions_so_far = enumerator.compositions;
    if (result.has_value()) {
      result->guesses_tried = compositions_so_far;
      return result;
    }
  }
  return std::nullopt;
}

}  // namespace chroma

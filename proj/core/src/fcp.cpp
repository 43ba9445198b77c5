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

#include "chroma/fcp.hpp"

#include <algorithm>
#include <cassert>

#include "chroma/cover_dp.hpp"
#include "chroma/errors.hpp"

namespace chroma {

namespace {

long long part_facility_dist(const ColorfulSpace& space, const std::vector<std::size_t>& part,
                             std::size_t f) {
  long long best = -1;
  for (std::size_t c : part) {
    long long d = space.client_facility_dist(c, f);
    if (best < 0 || d < best) best = d;
  }
  return best;
}
}  // namespace

std::vector<long long> FcpInstance::total_weights() const {
  std::vector<long long> totals(weights.size(), 0);
  for (std::size_t l = 0; l < weights.size(); ++l) {
    for (long long w : weights[l]) totals[l] += w;
  }
  return totals;
}

std::vector<long long> FcpInstance::covered_by(const std::vector<std::size_t>& family) const {
  std::vector<char> in_union(universe.size(), 0);
  for (std::size_t s : family) {
    for (std::size_t u : sets[s]) in_union[u] = 1;
  }
  std::vector<long long> covered(gamma(), 0);
  for (std::size_t u = 0; u < universe.size(); ++u) {
    if (!in_union[u]) continue;
    for (int l = 0; l < gamma(); ++l) covered[l] += weights[l][u];
  }
  return covered;
}

FcpInstance build_fcp(const ColorfulSpace& space, const Partition& partition, long long radius,
                      const std::vector<long long>& requirements,
                      const FacilityConstraint& constraint) {
  FcpInstance fcp;
  fcp.requirements = requirements;
  fcp.constraint = constraint;
  fcp.weights.assign(space.gamma, std::vector<long long>(partition.size(), 0));
  for (std::size_t p = 0; p < partition.size(); ++p) {
    fcp.universe.push_back("A" + std::to_string(p));
    for (std::size_t c : partition.parts[p]) {
      for (int l = 0; l < space.gamma; ++l) fcp.weights[l][p] += space.weights[l][c];
    }
  }
  for (std::size_t f = 0; f < space.num_facilities(); ++f) {
    std::vector<std::size_t> members;
    for (std::size_t p = 0; p < partition.size(); ++p) {
      long long d = part_facility_dist(space, partition.parts[p], f);
      if (d >= 0 && d <= radius) members.push_back(p);
    }
    fcp.sets.push_back(std::move(members));
  }
  return fcp;
}

std::optional<FcpSolution> solve_fcp_knapsack(const FcpInstance& fcp) {
  const auto& knapsack = fcp.constraint.knapsack();
  const std::size_t n = fcp.universe.size();

  // eta(u): cost of the cheapest set containing u; elements no set contains
  // keep an unusable cost and are simply never selected.
  std::vector<long long> eta(n, kUnusable);
  std::vector<std::size_t> cheapest_set(n, fcp.sets.size());
  for (std::size_t s = 0; s < fcp.sets.size(); ++s) {
    for (std::size_t u : fcp.sets[s]) {
      if (knapsack.costs[s] < eta[u]) {
        eta[u] = knapsack.costs[s];
        cheapest_set[u] = s;  // lowest set id on ties, since s ascends
      }
    }
  }

  std::optional<CoverDpResult> dp = min_cost_cover(fcp.weights, eta, fcp.requirements);
  if (!dp.has_value() || dp->cost > knapsack.budget) return std::nullopt;

  FcpSolution sol;
  sol.cost = dp->cost;
  for (std::size_t u : dp->chosen) sol.family.push_back(cheapest_set[u]);
  std::sort(sol.family.begin(), sol.family.end());
  sol.family.erase(std::unique(sol.family.begin(), sol.family.end()), sol.family.end());
  return sol;
}

FcpBruteForceResult brute_force_fcp(const FcpInstance& fcp) {
  if (fcp.sets.size() > 15)
    throw SizeLimitExceeded("brute_force_fcp supports at most 15 sets");
  const std::size_t num_sets = fcp.sets.size();
  FcpBruteForceResult result;

  for (std::uint64_t mask = 0; mask < (1ULL << num_sets); ++mask) {
    std::vector<std::size_t> family;
    for (std::size_t s = 0; s < num_sets; ++s) {
      if (mask & (1ULL << s)) family.push_back(s);
    }
    if (!fcp.constraint.allows(family)) continue;

    if (!result.solution.has_value()) {
      std::vector<long long> covered = fcp.covered_by(family);
      bool ok = true;
      for (int l = 0; l < fcp.gamma(); ++l) ok = ok && covered[l] >= fcp.requirements[l];
      if (ok) result.solution = family;
    }

    if (!result.promise_holds) {
      // Enumerate one representative per set. An element may be picked by
      // several sets but the system of representatives is a set, so its
      // weight counts once.
      bool any_empty = false;
      for (std::size_t s : family) any_empty = any_empty || fcp.sets[s].empty();
      if (!any_empty) {
        std::vector<std::size_t> pick(family.size(), 0);
        for (;;) {
          std::vector<char> chosen(fcp.universe.size(), 0);
          for (std::size_t i = 0; i < family.size(); ++i) {
            chosen[fcp.sets[family[i]][pick[i]]] = 1;
          }
          std::vector<long long> total(fcp.gamma(), 0);
          for (std::size_t u = 0; u < fcp.universe.size(); ++u) {
            if (!chosen[u]) continue;
            for (int l = 0; l < fcp.gamma(); ++l) total[l] += fcp.weights[l][u];
          }
          bool ok = true;
          for (int l = 0; l < fcp.gamma(); ++l) ok = ok && total[l] >= fcp.requirements[l];
          if (ok) {
            result.promise_holds = true;
            break;
          }
          std::size_t i = 0;
          while (i < family.size() && ++pick[i] == fcp.sets[family[i]].size()) {
            pick[i] = 0;
            ++i;
          }
          if (i == family.size()) break;
        }
      }
    }
    if (result.solution.has_value() && result.promise_holds) break;
  }
  return result;
}

}  // namespace chroma

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

#include "chroma/core.hpp"

#include <algorithm>
#include <string>

#include "chroma/errors.hpp"
#include "chroma/primefield.hpp"

namespace chroma {

std::vector<long long> ColorfulSpace::total_weights() const {
  std::vector<long long> totals(gamma, 0);
  for (int l = 0; l < gamma; ++l) {
    for (long long w : weights[l]) totals[l] += w;
  }
  return totals;
}

long long KnapsackConstraint::cost_of(std::span<const std::size_t> subset) const {
  long long total = 0;
  for (std::size_t f : subset) total += costs[f];
  return total;
}

bool FacilityConstraint::allows(std::span<const std::size_t> facility_subset) const {
  if (is_knapsack()) {
    return knapsack().cost_of(facility_subset) <= knapsack().budget;
  }
  const auto& lm = linear_matroid();
  std::size_t num_rows = lm.columns.empty() ? 0 : lm.columns.front().size();
  PrimeFieldMatrix mat(lm.prime, num_rows, lm.columns.size());
  for (std::size_t f = 0; f < lm.columns.size(); ++f) {
    for (std::size_t r = 0; r < num_rows; ++r) mat.at(r, f) = lm.columns[f][r];
  }
  return rank_and_independence(mat, facility_subset).second;
}

bool SupplierInstance::trivially_infeasible() const {
  std::vector<long long> totals = space.total_weights();
  for (int l = 0; l < space.gamma; ++l) {
    if (requirements[l] > totals[l]) return true;
  }
  return false;
}

namespace {

void validate_shapes(const SupplierInstance& inst) {
  const ColorfulSpace& s = inst.space;
  std::size_t n = s.num_points();
  if (s.dist.size() != n * n) throw ValidationError("distance matrix size does not match point count");
  if (static_cast<int>(s.weights.size()) != s.gamma)
    throw ValidationError("weights must have one row per color");
  for (const auto& row : s.weights) {
    if (row.size() != s.num_clients()) throw ValidationError("weight row size mismatch");
  }
  if (static_cast<int>(inst.requirements.size()) != s.gamma)
    throw ValidationError("requirements must have one entry per color");
  if (s.gamma < 0) throw ValidationError("gamma must be nonnegative");
  if (inst.constraint.is_knapsack()) {
    const auto& k = inst.constraint.knapsack();
    if (k.costs.size() != s.num_facilities())
      throw ValidationError("knapsack costs must have one entry per facility");
    if (k.budget < 0) throw ValidationError("knapsack budget must be nonnegative");
    for (long long c : k.costs) {
      if (c < 0) throw ValidationError("knapsack costs must be nonnegative");
    }
  } else {
    const auto& lm = inst.constraint.linear_matroid();
    if (lm.columns.size() != s.num_facilities())
      throw ValidationError("matroid must have one column per facility");
    std::size_t rows = lm.columns.empty() ? 0 : lm.columns.front().size();
    for (const auto& col : lm.columns) {
      if (col.size() != rows) throw ValidationError("matroid columns must have equal length");
      for (long long e : col) {
        if (e < 0 || e >= lm.prime) throw ValidationError("matroid entry outside [0, p)");
      }
    }
  }
  for (long long m : inst.requirements) {
    if (m < 0) throw ValidationError("requirements must be nonnegative");
  }
}

void validate_metric(const ColorfulSpace& s, bool check_triangle) {
  std::size_t n = s.num_points();
  for (std::size_t a = 0; a < n; ++a) {
    if (s.point_dist(a, a) != 0) throw ValidationError("distance matrix has nonzero diagonal");
    for (std::size_t b = a + 1; b < n; ++b) {
      if (s.point_dist(a, b) < 0) throw ValidationError("negative distance");
      if (s.point_dist(a, b) != s.point_dist(b, a))
        throw ValidationError("distance matrix is not symmetric");
    }
  }
  if (!check_triangle) return;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (s.point_dist(a, c) > s.point_dist(a, b) + s.point_dist(b, c))
          throw TriangleViolation(a, b, c);
      }
    }
  }
}

}  // namespace

SupplierInstance normalize_and_validate(const SupplierInstance& raw, bool check_triangle) {
  validate_shapes(raw);
  const ColorfulSpace& s = raw.space;
  for (int l = 0; l < s.gamma; ++l) {
    for (std::size_t c = 0; c < s.num_clients(); ++c) {
      if (s.weights[l][c] < 0)
        throw NegativeWeight("client " + s.clients[c] + " has negative weight in color " +
                             std::to_string(l));
    }
  }
  if (raw.constraint.is_linear_matroid()) {
    long long p = raw.constraint.linear_matroid().prime;
    if (!is_prime(p)) throw NonPrimeField(p);
  }

  // A client carrying k >= 2 colors becomes k co-located single-color copies.
  std::vector<std::vector<int>> colors_of(s.num_clients());
  bool needs_split = false;
  for (std::size_t c = 0; c < s.num_clients(); ++c) {
    for (int l = 0; l < s.gamma; ++l) {
      if (s.weights[l][c] > 0) colors_of[c].push_back(l);
    }
    if (colors_of[c].size() >= 2) needs_split = true;
  }

  SupplierInstance out = raw;
  if (needs_split) {
    ColorfulSpace split;
    split.gamma = s.gamma;
    split.facilities = s.facilities;
    std::vector<std::size_t> origin;  // old client index per new client
    std::vector<int> copy_color;      // color carried by the copy, -1 = all (unsplit)
    for (std::size_t c = 0; c < s.num_clients(); ++c) {
      if (colors_of[c].size() >= 2) {
        for (int l : colors_of[c]) {
          split.clients.push_back(s.clients[c] + "~" + std::to_string(l));
          origin.push_back(c);
          copy_color.push_back(l);
        }
      } else {
        split.clients.push_back(s.clients[c]);
        origin.push_back(c);
        copy_color.push_back(-1);
      }
    }
    std::size_t nc = split.clients.size();
    std::size_t nf = s.num_facilities();
    std::size_t n = nc + nf;
    auto old_point = [&](std::size_t p) {
      return p < nc ? origin[p] : s.num_clients() + (p - nc);
    };
    split.dist.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        // Copies of the same client are co-located: distance zero among
        // themselves, original distances to everything else.
        split.dist[a * n + b] = s.point_dist(old_point(a), old_point(b));
      }
    }
    split.weights.assign(s.gamma, std::vector<long long>(nc, 0));
    for (std::size_t c = 0; c < nc; ++c) {
      if (copy_color[c] >= 0) {
        split.weights[copy_color[c]][c] = s.weights[copy_color[c]][origin[c]];
      } else {
        for (int l = 0; l < s.gamma; ++l) split.weights[l][c] = s.weights[l][origin[c]];
      }
    }
    out.space = std::move(split);
  }

  validate_metric(out.space, check_triangle);
  return out;
}

std::vector<long long> radius_candidates(const ColorfulSpace& space) {
  std::vector<long long> values;
  values.reserve(space.num_clients() * space.num_facilities());
  for (std::size_t c = 0; c < space.num_clients(); ++c) {
    for (std::size_t f = 0; f < space.num_facilities(); ++f) {
      values.push_back(space.client_facility_dist(c, f));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<long long> coverage(const ColorfulSpace& space, std::span<const std::size_t> centers,
                                long long radius) {
  for (std::size_t f : centers) {
    if (f >= space.num_facilities())
      throw UnknownFacility("facility index " + std::to_string(f) + " out of range");
  }
  std::vector<long long> covered(space.gamma, 0);
  for (std::size_t c = 0; c < space.num_clients(); ++c) {
    bool inside = false;
    for (std::size_t f : centers) {
      if (space.client_facility_dist(c, f) <= radius) {
        inside = true;
        break;
      }
    }
    if (!inside) continue;
    for (int l = 0; l < space.gamma; ++l) covered[l] += space.weights[l][c];
  }
  return covered;
}

SupplierSolution check_solution(const SupplierInstance& instance, std::vector<std::size_t> centers,
                                long long radius) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  SupplierSolution sol;
  sol.covered = coverage(instance.space, centers, radius);
  sol.centers = std::move(centers);
  sol.radius = radius;
  sol.feasible = instance.constraint.allows(sol.centers);
  for (int l = 0; l < instance.space.gamma; ++l) {
    if (sol.covered[l] < instance.requirements[l]) sol.feasible = false;
  }
  return sol;
}

}  // namespace chroma

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

#ifndef CHROMA_TYPES_HPP
#define CHROMA_TYPES_HPP

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace chroma {

/// Finite metric on clients + facilities with per-color integer weights on the
/// clients. Distances are nonnegative integers given as a full matrix; points
/// are ordered clients first, then facilities. Immutable after construction.
struct ColorfulSpace {
  std::vector<std::string> clients;
  std::vector<std::string> facilities;
  std::vector<long long> dist;  // (nc+nf)^2 entries, row-major
  int gamma = 0;
  std::vector<std::vector<long long>> weights;  // [gamma][nc]

  std::size_t num_clients() const { return clients.size(); }
  std::size_t num_facilities() const { return facilities.size(); }
  std::size_t num_points() const { return clients.size() + facilities.size(); }

  long long point_dist(std::size_t a, std::size_t b) const { return dist[a * num_points() + b]; }
  long long client_facility_dist(std::size_t c, std::size_t f) const {
    return point_dist(c, num_clients() + f);
  }
  long long client_client_dist(std::size_t a, std::size_t b) const { return point_dist(a, b); }
  long long facility_facility_dist(std::size_t f, std::size_t g) const {
    return point_dist(num_clients() + f, num_clients() + g);
  }

  /// Total weight W_l per color; the unary-size bound used by all DPs.
  std::vector<long long> total_weights() const;
};

struct KnapsackConstraint {
  std::vector<long long> costs;  // per facility
  long long budget = 0;

  long long cost_of(std::span<const std::size_t> subset) const;
};

struct LinearMatroidConstraint {
  long long prime = 2;
  std::vector<std::vector<long long>> columns;  // one column per facility
};

/// Down-closed feasibility structure on the facilities.
struct FacilityConstraint {
  std::variant<KnapsackConstraint, LinearMatroidConstraint> value;

  bool is_knapsack() const { return std::holds_alternative<KnapsackConstraint>(value); }
  bool is_linear_matroid() const { return std::holds_alternative<LinearMatroidConstraint>(value); }
  const KnapsackConstraint& knapsack() const { return std::get<KnapsackConstraint>(value); }
  const LinearMatroidConstraint& linear_matroid() const {
    return std::get<LinearMatroidConstraint>(value);
  }

  /// Whether the facility subset is feasible (cost within budget, or columns
  /// linearly independent). Indices must be valid facility indices.
  bool allows(std::span<const std::size_t> facility_subset) const;
};

struct SupplierInstance {
  ColorfulSpace space;
  std::vector<long long> requirements;  // m_l, one per color
  FacilityConstraint constraint;

  /// True when some requirement exceeds the total weight of its color.
  bool trivially_infeasible() const;
};

struct SupplierSolution {
  std::vector<std::size_t> centers;  // facility indices, sorted
  long long radius = 0;
  std::vector<long long> covered;  // per color
  bool feasible = false;
};

}  // namespace chroma

#endif  // CHROMA_TYPES_HPP

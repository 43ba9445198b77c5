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

#ifndef CHROMA_LINMAT_HPP
#define CHROMA_LINMAT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chroma/fcp.hpp"
#include "chroma/primefield.hpp"

namespace chroma {

/// Linear representation of the Rado matroid induced by (universe, family, M):
/// the column of element u is sum_{H containing u} x_{H,u} * col(H) with
/// coefficients drawn uniformly from F_p \ {0}. With probability at least
/// 1 - |universe| * rank / p the independence pattern equals the Rado
/// matroid's. Elements contained in no set become zero columns (loops).
PrimeFieldMatrix rado_representation(std::size_t universe_size,
                                     const std::vector<std::vector<std::size_t>>& family,
                                     const PrimeFieldMatrix& matroid, std::uint64_t seed);

struct XwiQuery {
  PrimeFieldMatrix matrix;
  std::vector<long long> weights;  // per column, nonnegative, unary-bounded
  long long target = 0;
  std::uint64_t seed = 0;
  int repetitions = 10;
};

/// Exact-weight independent set: returns column indices that are linearly
/// independent with total weight exactly `target`, or nullopt. Soundness is
/// unconditional (every output is re-verified); completeness holds with
/// probability at least 1 - 2^-repetitions. Reduces to exact-weight basis by
/// appending zero-weight column copies, decides existence through the weight
/// enumerator det(A D(y) A^T) recovered by multipoint evaluation and Lagrange
/// interpolation, and extracts a witness by test-deletion self-reduction.
std::optional<std::vector<std::size_t>> xwi(const XwiQuery& query);

using IndependenceOracle = std::function<bool(const std::vector<std::size_t>&)>;

/// Maximum-cardinality common independent set of two matroids given by
/// independence oracles, via shortest augmenting paths in the exchange graph.
std::vector<std::size_t> matroid_intersection(std::size_t ground_size,
                                              const IndependenceOracle& first,
                                              const IndependenceOracle& second);

/// Cover-promise solver for a linear-matroid constraint: builds the Rado
/// representation, guesses the per-color weight vector of the promised
/// representative set (lexicographically descending), packs colors into one
/// weight by bit fields, runs xwi, and recovers the set family by matroid
/// intersection between the transversal structure of the found element set
/// and the constraint matroid. Returns nullopt only if every guess fails.
std::optional<std::vector<std::size_t>> solve_fcp_linear_matroid(const FcpInstance& fcp,
                                                                 std::uint64_t seed,
                                                                 int repetitions = 10);

}  // namespace chroma

#endif  // CHROMA_LINMAT_HPP

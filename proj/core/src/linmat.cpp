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

#include "chroma/linmat.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "chroma/errors.hpp"
#include "chroma/matching.hpp"
#include "chroma/rng.hpp"

namespace chroma {

PrimeFieldMatrix rado_representation(std::size_t universe_size,
                                     const std::vector<std::vector<std::size_t>>& family,
                                     const PrimeFieldMatrix& matroid, std::uint64_t seed) {
  const long long p = matroid.prime;
  long long degree = 2LL * static_cast<long long>(universe_size) *
                     static_cast<long long>(std::min(matroid.rows, matroid.cols));
  if (p <= std::max(degree, 2LL))
    throw PrimeTooSmall("prime " + std::to_string(p) + " below the failure-bound threshold " +
                        std::to_string(degree));
  assert(family.size() == matroid.cols);

  Rng rng(seed);
  PrimeFieldMatrix out(p, matroid.rows, universe_size);
  for (std::size_t h = 0; h < family.size(); ++h) {
    for (std::size_t u : family[h]) {
      long long coeff = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(p - 1)));
      for (std::size_t r = 0; r < matroid.rows; ++r) {
        out.at(r, u) = (out.at(r, u) + mod_mul(coeff, matroid.at(r, h), p)) % p;
      }
    }
  }
  return out;
}

namespace {

// Weight enumerator of the column matroid of `mat` extended with zero-weight
// column copies: coefficient of y^w is nonzero iff some full-row-rank-many
// independent extended columns of total weight w exist, which happens iff an
// independent subset of the original columns has weight exactly w. One
// randomized evaluation per repetition; a weight is reported achievable as
// soon as any repetition certifies it (nonzero coefficients never lie).
struct ExtendedMatrix {
  PrimeFieldMatrix reduced;            // full row rank
  std::vector<long long> ext_weights;  // original weights then zeros
  long long total_weight = 0;

  std::size_t num_ext() const { return 2 * reduced.cols; }
  long long ext_weight(std::size_t e) const { return ext_weights[e]; }
  long long entry(std::size_t r, std::size_t e) const {
    return reduced.at(r, e % reduced.cols);
  }
};

ExtendedMatrix make_extended(const PrimeFieldMatrix& matrix,
                             const std::vector<long long>& weights) {
  ExtendedMatrix ext;
  ext.reduced = matrix.row_reduced();
  ext.ext_weights = weights;
  ext.ext_weights.resize(2 * matrix.cols, 0);
  for (long long w : weights) ext.total_weight += w;
  return ext;
}

// Coefficients of the weight enumerator restricted to the available extended
// columns, for one draw of the random column scalars.
std::vector<long long> enumerator_coefficients(const ExtendedMatrix& ext,
                                               const std::vector<char>& available,
                                               std::uint64_t seed) {
  const long long p = ext.reduced.prime;
  const std::size_t rank = ext.reduced.rows;
  const std::size_t points = static_cast<std::size_t>(ext.total_weight) + 1;

  Rng rng(seed);
  std::vector<long long> scalars(ext.num_ext(), 0);
  for (std::size_t e = 0; e < ext.num_ext(); ++e) {
    if (available[e])
      scalars[e] = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(p - 1)));
  }

  // Evaluate det(A D(y) A^T) at y = 1..points.
  std::vector<long long> values(points, 0);
  for (std::size_t k = 0; k < points; ++k) {
    long long y = static_cast<long long>(k + 1) % p;
    PrimeFieldMatrix gram(p, rank, rank);
    for (std::size_t e = 0; e < ext.num_ext(); ++e) {
      if (!available[e]) continue;
      long long coeff = mod_mul(scalars[e], mod_pow(y, ext.ext_weight(e), p), p);
      if (coeff == 0) continue;
      for (std::size_t r = 0; r < rank; ++r) {
        long long er = ext.entry(r, e);
        if (er == 0) continue;
        long long row_coeff = mod_mul(coeff, er, p);
        for (std::size_t c = 0; c < rank; ++c) {
          gram.at(r, c) = (gram.at(r, c) + mod_mul(row_coeff, ext.entry(c, e), p)) % p;
        }
      }
    }
    values[k] = determinant(gram);
  }

  // Lagrange interpolation in coefficient form. master = prod_k (y - y_k).
  std::vector<long long> master(points + 1, 0);
  master[0] = 1;
  for (std::size_t k = 0; k < points; ++k) {
    // Multiply the running product by (y - y_k) in place, high to low.
    long long neg_yk = p - static_cast<long long>(k + 1) % p;
    for (std::size_t j = k + 1; j >= 1; --j) {
      master[j] = (master[j - 1] + mod_mul(neg_yk, master[j], p)) % p;
    }
    master[0] = mod_mul(neg_yk, master[0], p);
  }
  std::vector<long long> coeffs(points, 0);
  std::vector<long long> quotient(points, 0);
  for (std::size_t k = 0; k < points; ++k) {
    if (values[k] == 0) continue;
    long long yk = static_cast<long long>(k + 1) % p;
    // quotient = master / (y - y_k), by synthetic division.
    long long carry = 0;
    for (std::size_t j = points; j-- > 0;) {
      quotient[j] = carry = (master[j + 1] + mod_mul(carry, yk, p)) % p;
    }
    long long denom = 1;
    for (std::size_t j = 0; j < points; ++j) {
      if (j == k) continue;
      long long yj = static_cast<long long>(j + 1) % p;
      denom = mod_mul(denom, (yk - yj % p + p) % p, p);
    }
    long long scale = mod_mul(values[k], mod_inv(denom, p), p);
    for (std::size_t j = 0; j < points; ++j) {
      coeffs[j] = (coeffs[j] + mod_mul(scale, quotient[j], p)) % p;
    }
  }
  return coeffs;
}

// Independent evaluation sweeps needed per decision so that the whole run
// (one existence decision plus up to 2n deletion tests) misses an existing
// weight with probability at most 2^-repetitions. One sweep misses with
// probability at most rank/p (Schwartz-Zippel on the column scalars), so a
// large field usually needs a single sweep.
int sweeps_needed(const ExtendedMatrix& ext, int repetitions) {
  const long long p = ext.reduced.prime;
  const long long rank = std::max<long long>(1, static_cast<long long>(ext.reduced.rows));
  double decisions = 2.0 * static_cast<double>(ext.num_ext()) + 1.0;
  double log_target = -(static_cast<double>(repetitions) + std::log2(decisions));
  int sweeps = 0;
  double log_miss = 0.0;
  while (log_miss > log_target && sweeps < repetitions) {
    ++sweeps;
    log_miss += std::log2(static_cast<double>(rank) / static_cast<double>(p));
  }
  return std::max(1, sweeps);
}

bool decide_weight(const ExtendedMatrix& ext, const std::vector<char>& available,
                   long long target, std::uint64_t seed, int repetitions) {
  if (target < 0 || target > ext.total_weight) return false;
  int sweeps = sweeps_needed(ext, repetitions);
  for (int rep = 0; rep < sweeps; ++rep) {
    std::vector<long long> coeffs =
        enumerator_coefficients(ext, available, Rng::derive(seed, static_cast<std::uint64_t>(rep)));
    if (coeffs[static_cast<std::size_t>(target)] != 0) return true;
  }
  return false;
}

void check_prime_large_enough(const PrimeFieldMatrix& matrix, long long total_weight) {
  long long needed = std::max<long long>(total_weight + 2, 2 * static_cast<long long>(matrix.rows));
  if (matrix.prime < needed)
    throw PrimeTooSmall("prime " + std::to_string(matrix.prime) +
                        " too small for weight range " + std::to_string(total_weight));
}

}  // namespace

std::optional<std::vector<std::size_t>> xwi(const XwiQuery& query) {
  for (long long w : query.weights) {
    if (w < 0) throw NegativeWeight("xwi weights must be nonnegative");
  }
  assert(query.weights.size() == query.matrix.cols);

  ExtendedMatrix ext = make_extended(query.matrix, query.weights);
  check_prime_large_enough(query.matrix, ext.total_weight);
  if (query.target < 0 || query.target > ext.total_weight) return std::nullopt;
  if (ext.reduced.rows == 0) {
    // Rank zero: the empty set is the only independent set.
    if (query.target == 0) return std::vector<std::size_t>{};
    return std::nullopt;
  }

  std::vector<char> available(ext.num_ext(), 1);
  if (!decide_weight(ext, available, query.target, Rng::derive(query.seed, 0),
                     query.repetitions)) {
    return std::nullopt;
  }

  // Self-reduction: drop every column whose removal keeps the target weight
  // achievable. What survives is exactly one witness basis of the extended
  // matroid.
  for (std::size_t e = 0; e < ext.num_ext(); ++e) {
    available[e] = 0;
    if (!decide_weight(ext, available, query.target, Rng::derive(query.seed, 1 + e),
                       query.repetitions)) {
      available[e] = 1;
    }
  }

  std::vector<std::size_t> survivors;
  long long weight = 0;
  for (std::size_t e = 0; e < ext.num_ext(); ++e) {
    if (available[e]) {
      survivors.push_back(e);
      weight += ext.ext_weight(e);
    }
  }
  std::vector<std::size_t> answer;
  for (std::size_t e : survivors) {
    if (e < query.matrix.cols) answer.push_back(e);
  }

  // Unconditional soundness: re-verify weight and independence before
  // returning. A failure here means the randomized decisions contradicted
  // themselves, which has probability at most 2n * 2^-repetitions.
  long long answer_weight = 0;
  for (std::size_t e : answer) answer_weight += query.weights[e];
  std::vector<std::size_t> survivor_cols;
  for (std::size_t e : survivors) survivor_cols.push_back(e % query.matrix.cols);
  bool survivors_ok = survivors.size() == ext.reduced.rows && weight == query.target;
  if (survivors_ok) {
    // Distinct original columns of the survivor set must be independent.
    std::sort(survivor_cols.begin(), survivor_cols.end());
    survivors_ok = std::adjacent_find(survivor_cols.begin(), survivor_cols.end()) ==
                   survivor_cols.end();
    survivors_ok =
        survivors_ok && rank_and_independence(query.matrix, survivor_cols).second;
  }
  if (!survivors_ok || answer_weight != query.target) {
    throw std::logic_error("xwi self-reduction produced an unsound witness");
  }
  return answer;
}

std::vector<std::size_t> matroid_intersection(std::size_t ground_size,
                                              const IndependenceOracle& first,
                                              const IndependenceOracle& second) {
  std::vector<char> in_set(ground_size, 0);

  auto current_with = [&](std::size_t add, std::size_t remove) {
    std::vector<std::size_t> subset;
    for (std::size_t e = 0; e < ground_size; ++e) {
      if (e == remove) continue;
      if (in_set[e] || e == add) subset.push_back(e);
    }
    return subset;
  };
  const std::size_t kNone = static_cast<std::size_t>(-1);

  for (;;) {
    std::vector<char> source(ground_size, 0), sink(ground_size, 0);
    for (std::size_t y = 0; y < ground_size; ++y) {
      if (in_set[y]) continue;
      auto grown = current_with(y, kNone);
      if (first(grown)) source[y] = 1;
      if (second(grown)) sink[y] = 1;
    }

    std::vector<std::vector<std::size_t>> adj(ground_size);
    for (std::size_t x = 0; x < ground_size; ++x) {
      if (!in_set[x]) continue;
      for (std::size_t y = 0; y < ground_size; ++y) {
        if (in_set[y]) continue;
        auto swapped = current_with(y, x);
        if (first(swapped)) adj[x].push_back(y);
        if (second(swapped)) adj[y].push_back(x);
      }
    }

    // Shortest augmenting path from a source to a sink.
    std::vector<std::size_t> parent(ground_size, kNone);
    std::vector<char> seen(ground_size, 0);
    std::deque<std::size_t> queue;
    for (std::size_t y = 0; y < ground_size; ++y) {
      if (source[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
    std::size_t reached = kNone;
    while (!queue.empty() && reached == kNone) {
      std::size_t v = queue.front();
      queue.pop_front();
      if (sink[v] && !in_set[v]) {
        reached = v;
        break;
      }
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (reached == kNone) break;
    for (std::size_t v = reached; v != kNone; v = parent[v]) in_set[v] = !in_set[v];
  }

  std::vector<std::size_t> result;
  for (std::size_t e = 0; e < ground_size; ++e) {
    if (in_set[e]) result.push_back(e);
  }
  return result;
}

namespace {

PrimeFieldMatrix constraint_matrix(const LinearMatroidConstraint& lm) {
  std::size_t rows = lm.columns.empty() ? 0 : lm.columns.front().size();
  PrimeFieldMatrix mat(lm.prime, rows, lm.columns.size());
  for (std::size_t c = 0; c < lm.columns.size(); ++c) {
    for (std::size_t r = 0; r < rows; ++r) mat.at(r, c) = lm.columns[c][r];
  }
  return mat;
}

}  // namespace

std::optional<std::vector<std::size_t>> solve_fcp_linear_matroid(const FcpInstance& fcp,
                                                                 std::uint64_t seed,
                                                                 int repetitions) {
  const auto& lm = fcp.constraint.linear_matroid();
  if (!is_prime(lm.prime)) throw NonPrimeField(lm.prime);
  const int gamma = fcp.gamma();
  PrimeFieldMatrix matroid = constraint_matrix(lm);
  PrimeFieldMatrix rado =
      rado_representation(fcp.universe.size(), fcp.sets, matroid, Rng::derive(seed, 0));

  // Pack the per-color weights into one weight via bit fields; subset sums
  // stay within their fields because each field holds the full color total.
  std::vector<long long> totals = fcp.total_weights();
  std::vector<int> shift(gamma, 0);
  int bits = 0;
  for (int l = 0; l < gamma; ++l) {
    shift[l] = bits;
    bits += std::bit_width(static_cast<unsigned long long>(totals[l]));
    if (bits > 62) throw SizeLimitExceeded("packed color weights exceed 62 bits");
  }
  auto pack = [&](const std::vector<long long>& per_color) {
    long long packed = 0;
    for (int l = 0; l < gamma; ++l) packed += per_color[l] << shift[l];
    return packed;
  };

  std::vector<long long> packed_weights(fcp.universe.size(), 0);
  for (std::size_t u = 0; u < fcp.universe.size(); ++u) {
    std::vector<long long> per_color(gamma);
    for (int l = 0; l < gamma; ++l) per_color[l] = fcp.weights[l][u];
    packed_weights[u] = pack(per_color);
  }

  ExtendedMatrix ext = make_extended(rado, packed_weights);
  check_prime_large_enough(rado, ext.total_weight);
  std::vector<char> all_columns(ext.num_ext(), 1);

  // One enumerator sweep per repetition answers "is packed weight w
  // achievable" for every w at once; full xwi runs only on surviving guesses.
  std::vector<char> achievable(static_cast<std::size_t>(ext.total_weight) + 1, 0);
  if (ext.reduced.rows == 0) {
    achievable[0] = 1;
  } else {
    int sweeps = sweeps_needed(ext, repetitions);
    for (int rep = 0; rep < sweeps; ++rep) {
      std::vector<long long> coeffs = enumerator_coefficients(
          ext, all_columns, Rng::derive(Rng::derive(seed, 1), static_cast<std::uint64_t>(rep)));
      for (std::size_t w = 0; w < coeffs.size(); ++w) {
        if (coeffs[w] != 0) achievable[w] = 1;
      }
    }
  }

  // Guesses descend lexicographically from the color totals.
  std::vector<long long> guess = totals;
  std::uint64_t guess_index = 0;
  for (;;) {
    ++guess_index;
    long long packed_target = pack(guess);
    if (!achievable[static_cast<std::size_t>(packed_target)]) {
      // fall through to odometer
    } else {
      XwiQuery query{rado, packed_weights, packed_target, Rng::derive(seed, 1 + guess_index),
                     repetitions};
      std::optional<std::vector<std::size_t>> elements = xwi(query);
      if (elements.has_value()) {
        // Sanity: the packed weight decomposes back into the guessed vector.
        std::vector<long long> found(gamma, 0);
        for (std::size_t u : *elements) {
          for (int l = 0; l < gamma; ++l) found[l] += fcp.weights[l][u];
        }
        assert(found == guess);

        // Recover a set family for which the found elements form a system of
        // representatives: matroid intersection of the transversal structure
        // with the constraint matroid, looking for |elements| common
        // independent sets.
        const std::vector<std::size_t>& reps = *elements;
        IndependenceOracle transversal = [&](const std::vector<std::size_t>& sets) {
          std::vector<std::vector<std::size_t>> adjacency;
          adjacency.reserve(sets.size());
          for (std::size_t s : sets) {
            std::vector<std::size_t> edges;
            for (std::size_t i = 0; i < reps.size(); ++i) {
              if (std::binary_search(fcp.sets[s].begin(), fcp.sets[s].end(), reps[i]))
                edges.push_back(i);
            }
            adjacency.push_back(std::move(edges));
          }
          return saturating_matching_exists(adjacency, reps.size());
        };
        IndependenceOracle linear = [&](const std::vector<std::size_t>& sets) {
          return rank_and_independence(matroid, sets).second;
        };
        std::vector<std::size_t> family =
            matroid_intersection(fcp.sets.size(), transversal, linear);
        if (family.size() == reps.size()) {
          std::vector<long long> covered = fcp.covered_by(family);
          bool ok = rank_and_independence(matroid, family).second;
          for (int l = 0; l < gamma; ++l) ok = ok && covered[l] >= fcp.requirements[l];
          if (ok) return family;
        }
      }
    }

    // Odometer step, descending.
    int l = gamma - 1;
    while (l >= 0 && guess[l] == 0) {
      guess[l] = totals[l];
      --l;
    }
    if (l < 0) break;
    --guess[l];
  }
  return std::nullopt;
}

}  // namespace chroma

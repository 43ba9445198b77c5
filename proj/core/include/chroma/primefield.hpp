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

#ifndef CHROMA_PRIMEFIELD_HPP
#define CHROMA_PRIMEFIELD_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chroma {

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(long long n);

long long mod_mul(long long a, long long b, long long p);
long long mod_pow(long long base, long long exp, long long p);
long long mod_inv(long long a, long long p);

/// Dense matrix over F_p with entries in [0, p).
struct PrimeFieldMatrix {
  long long prime = 2;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<long long> entries;  // row-major

  PrimeFieldMatrix() = default;
  PrimeFieldMatrix(long long p, std::size_t r, std::size_t c)
      : prime(p), rows(r), cols(c), entries(r * c, 0) {}

  long long at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  long long& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

  /// Column c as a vector of length `rows`.
  std::vector<long long> column(std::size_t c) const;

  /// Matrix with the same row space but full row rank (zero rows of the
  /// echelon form dropped). Column dependencies are unchanged.
  PrimeFieldMatrix row_reduced() const;
};

/// Rank of the submatrix formed by the given columns, and whether those
/// columns are linearly independent over F_p.
std::pair<std::size_t, bool> rank_and_independence(const PrimeFieldMatrix& matrix,
                                                   std::span<const std::size_t> column_subset);

std::size_t matrix_rank(const PrimeFieldMatrix& matrix);

/// Determinant of a square matrix over F_p.
long long determinant(const PrimeFieldMatrix& matrix);

}  // namespace chroma

#endif  // CHROMA_PRIMEFIELD_HPP

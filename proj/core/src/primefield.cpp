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

#include "chroma/primefield.hpp"

#include <cassert>
#include <stdexcept>

namespace chroma {

long long mod_mul(long long a, long long b, long long p) {
  return static_cast<long long>(static_cast<unsigned __int128>(a) % p * (b % p) % p);
}

long long mod_pow(long long base, long long exp, long long p) {
  long long result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base, p);
    base = mod_mul(base, base, p);
    exp >>= 1;
  }
  return result;
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (long long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    long long x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mod_mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<long long> PrimeFieldMatrix::column(std::size_t c) const {
  std::vector<long long> out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

namespace {

// In-place forward elimination. Returns the rank; `mat` is left in row
// echelon form (row swaps only, no column swaps).
std::size_t eliminate(PrimeFieldMatrix& mat) {
  const long long p = mat.prime;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < mat.cols && rank < mat.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < mat.rows && mat.at(pivot, col) == 0) ++pivot;
    if (pivot == mat.rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < mat.cols; ++c) std::swap(mat.at(pivot, c), mat.at(rank, c));
    }
    long long inv = mod_inv(mat.at(rank, col), p);
    for (std::size_t c = col; c < mat.cols; ++c) mat.at(rank, c) = mod_mul(mat.at(rank, c), inv, p);
    for (std::size_t r = 0; r < mat.rows; ++r) {
      if (r == rank || mat.at(r, col) == 0) continue;
      long long factor = mat.at(r, col);
      for (std::size_t c = col; c < mat.cols; ++c) {
        mat.at(r, c) = (mat.at(r, c) - mod_mul(factor, mat.at(rank, c), p) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

PrimeFieldMatrix PrimeFieldMatrix::row_reduced() const {
  PrimeFieldMatrix work = *this;
  std::size_t rank = eliminate(work);
  PrimeFieldMatrix out(prime, rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = work.at(r, c);
  }
  return out;
}

std::pair<std::size_t, bool> rank_and_independence(const PrimeFieldMatrix& matrix,
                                                   std::span<const std::size_t> column_subset) {
  PrimeFieldMatrix sub(matrix.prime, matrix.rows, column_subset.size());
  for (std::size_t j = 0; j < column_subset.size(); ++j) {
    if (column_subset[j] >= matrix.cols) throw std::out_of_range("column index out of range");
    for (std::size_t r = 0; r < matrix.rows; ++r) sub.at(r, j) = matrix.at(r, column_subset[j]);
  }
  std::size_t rank = eliminate(sub);
  return {rank, rank == column_subset.size()};
}

std::size_t matrix_rank(const PrimeFieldMatrix& matrix) {
  PrimeFieldMatrix work = matrix;
  return eliminate(work);
}

long long determinant(const PrimeFieldMatrix& matrix) {
  assert(matrix.rows == matrix.cols);
  PrimeFieldMatrix work = matrix;
  const long long p = work.prime;
  long long det = 1 % p;
  for (std::size_t col = 0; col < work.cols; ++col) {
    std::size_t pivot = col;
    while (pivot < work.rows && work.at(pivot, col) == 0) ++pivot;
    if (pivot == work.rows) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < work.cols; ++c) std::swap(work.at(pivot, c), work.at(col, c));
      det = (p - det) % p;
    }
    det = mod_mul(det, work.at(col, col), p);
    long long inv = mod_inv(work.at(col, col), p);
    for (std::size_t r = col + 1; r < work.rows; ++r) {
      if (work.at(r, col) == 0) continue;
      long long factor = mod_mul(work.at(r, col), inv, p);
      for (std::size_t c = col; c < work.cols; ++c) {
        work.at(r, c) = (work.at(r, c) - mod_mul(factor, work.at(col, c), p) % p + p) % p;
      }
    }
  }
  return det;
}

}  // namespace chroma

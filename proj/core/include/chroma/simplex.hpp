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

#ifndef CHROMA_SIMPLEX_HPP
#define CHROMA_SIMPLEX_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace chroma {

using Rational = mpq_class;

/// gmpxx has no long long conversions; LP64 long carries the full value.
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

enum class Relation { LessEq, GreaterEq, Equal };

struct LpConstraint {
  std::vector<Rational> coeffs;  // one per variable
  Relation relation = Relation::LessEq;
  Rational rhs;
};

/// min objective . x subject to the constraints, 0 <= x, and x_j <= ub_j
/// where an upper bound is present.
struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::optional<Rational>> upper_bounds;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;  // basic optimal solution (a vertex)
  Rational objective;
};

/// Two-phase tableau simplex with Bland's rule. Exact rational arithmetic,
/// fully deterministic; the returned solution is always a basic one.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace chroma

#endif  // CHROMA_SIMPLEX_HPP

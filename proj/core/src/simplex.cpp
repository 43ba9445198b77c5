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

#include "chroma/simplex.hpp"

#include <cassert>

namespace chroma {

namespace {

// Dense tableau with a maintained reduced-cost row (last row). Bland's rule
// throughout: smallest eligible entering column, smallest basic variable on
// ratio ties. Exact arithmetic keeps the zero tests meaningful.
class Tableau {
 public:
  std::vector<std::vector<Rational>> rows;  // m constraint rows + 1 objective row
  std::vector<std::size_t> basis;
  std::vector<char> is_artificial;
  std::size_t num_cols = 0;  // excludes rhs column

  std::size_t num_rows() const { return basis.size(); }
  Rational& at(std::size_t r, std::size_t c) { return rows[r][c]; }
  Rational& rhs(std::size_t r) { return rows[r][num_cols]; }
  std::vector<Rational>& objective_row() { return rows[num_rows()]; }

  void set_costs(const std::vector<Rational>& cost) {
    auto& obj = objective_row();
    for (std::size_t c = 0; c <= num_cols; ++c) obj[c] = c < num_cols ? cost[c] : Rational(0);
    for (std::size_t i = 0; i < num_rows(); ++i) {
      if (sgn(cost[basis[i]]) == 0) continue;
      Rational factor = cost[basis[i]];
      for (std::size_t c = 0; c <= num_cols; ++c) obj[c] -= factor * rows[i][c];
    }
  }

  void pivot(std::size_t prow, std::size_t pcol) {
    Rational inv = 1 / rows[prow][pcol];
    for (auto& v : rows[prow]) v *= inv;
    for (std::size_t r = 0; r <= num_rows(); ++r) {
      if (r == prow || sgn(rows[r][pcol]) == 0) continue;
      Rational factor = rows[r][pcol];
      for (std::size_t c = 0; c <= num_cols; ++c) rows[r][c] -= factor * rows[prow][c];
    }
    basis[prow] = pcol;
  }

  enum class Step { Optimal, Pivoted, Unbounded };

  Step step(bool allow_artificial_entering) {
    const auto& obj = objective_row();
    std::size_t entering = num_cols;
    for (std::size_t j = 0; j < num_cols; ++j) {
      if (!allow_artificial_entering && is_artificial[j]) continue;
      if (sgn(obj[j]) < 0) {
        entering = j;
        break;
      }
    }
    if (entering == num_cols) return Step::Optimal;

    std::size_t leave_row = num_rows();
    Rational best_ratio;
    for (std::size_t i = 0; i < num_rows(); ++i) {
      if (sgn(rows[i][entering]) <= 0) continue;
      Rational ratio = rows[i][num_cols] / rows[i][entering];
      if (leave_row == num_rows() || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave_row])) {
        leave_row = i;
        best_ratio = ratio;
      }
    }
    if (leave_row == num_rows()) return Step::Unbounded;
    pivot(leave_row, entering);
    return Step::Pivoted;
  }
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  // Materialize upper bounds as rows so every variable is just x >= 0.
  std::vector<LpConstraint> all = lp.constraints;
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (j < lp.upper_bounds.size() && lp.upper_bounds[j].has_value()) {
      LpConstraint row;
      row.coeffs.assign(lp.num_vars, Rational(0));
      row.coeffs[j] = 1;
      row.relation = Relation::LessEq;
      row.rhs = *lp.upper_bounds[j];
      all.push_back(std::move(row));
    }
  }

  const std::size_t m = all.size();
  std::size_t num_slack = 0;
  for (const auto& c : all) {
    if (c.relation != Relation::Equal) ++num_slack;
  }

  Tableau t;
  t.num_cols = lp.num_vars + num_slack + m;  // worst case: one artificial per row
  t.is_artificial.assign(t.num_cols, 0);
  t.rows.assign(m + 1, std::vector<Rational>(t.num_cols + 1, Rational(0)));
  t.basis.assign(m, 0);

  std::size_t next_slack = lp.num_vars;
  std::size_t next_artificial = lp.num_vars + num_slack;
  std::size_t num_artificial = 0;
  for (std::size_t i = 0; i < m; ++i) {
    Rational sign = sgn(all[i].rhs) < 0 ? Rational(-1) : Rational(1);  // keep rhs >= 0
    for (std::size_t j = 0; j < lp.num_vars; ++j) t.at(i, j) = sign * all[i].coeffs[j];
    t.rhs(i) = sign * all[i].rhs;
    Relation rel = all[i].relation;
    if (sign == -1) {
      if (rel == Relation::LessEq) rel = Relation::GreaterEq;
      else if (rel == Relation::GreaterEq) rel = Relation::LessEq;
    }

    if (rel == Relation::LessEq) {
      t.at(i, next_slack) = 1;
      t.basis[i] = next_slack++;
    } else {
      if (rel == Relation::GreaterEq) t.at(i, next_slack++) = -1;
      t.at(i, next_artificial) = 1;
      t.is_artificial[next_artificial] = 1;
      t.basis[i] = next_artificial++;
      ++num_artificial;
    }
  }

  LpResult result;

  if (num_artificial > 0) {
    std::vector<Rational> phase1_cost(t.num_cols, Rational(0));
    for (std::size_t j = 0; j < t.num_cols; ++j) {
      if (t.is_artificial[j]) phase1_cost[j] = 1;
    }
    t.set_costs(phase1_cost);
    for (;;) {
      Tableau::Step s = t.step(true);
      if (s == Tableau::Step::Optimal) break;
      assert(s != Tableau::Step::Unbounded);  // phase-1 objective is bounded below by 0
    }
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t.is_artificial[t.basis[i]]) infeasibility += t.rhs(i);
    }
    if (sgn(infeasibility) != 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive degenerate artificials out of the basis where possible. A row
    // that stays basic in an artificial is redundant; its rhs is zero and
    // artificials never re-enter, so it can simply stay.
    for (std::size_t i = 0; i < m; ++i) {
      if (!t.is_artificial[t.basis[i]]) continue;
      for (std::size_t j = 0; j < t.num_cols; ++j) {
        if (!t.is_artificial[j] && sgn(t.rows[i][j]) != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> cost(t.num_cols, Rational(0));
  for (std::size_t j = 0; j < lp.num_vars; ++j) cost[j] = lp.objective[j];
  t.set_costs(cost);
  for (;;) {
    Tableau::Step s = t.step(false);
    if (s == Tableau::Step::Optimal) break;
    if (s == Tableau::Step::Unbounded) {
      result.status = LpStatus::Unbounded;
      return result;
    }
  }

  result.status = LpStatus::Optimal;
  result.x.assign(lp.num_vars, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis[i] < lp.num_vars) result.x[t.basis[i]] = t.rhs(i);
  }
  result.objective = 0;
  for (std::size_t j = 0; j < lp.num_vars; ++j) result.objective += lp.objective[j] * result.x[j];
  return result;
}

}  // namespace chroma

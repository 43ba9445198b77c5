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

#include <doctest.h>

#include <stdexcept>

#include "chroma/core.hpp"
#include "chroma/harness.hpp"
#include "chroma/json_io.hpp"
#include "chroma/reduction.hpp"
#include "test_util.hpp"

using namespace chroma;
using testing::tiny1;

TEST_CASE("reduction factor bound formula") {
  CHECK(reduction_factor_bound(0) == 1);
  CHECK(reduction_factor_bound(1) == 11);
  CHECK(reduction_factor_bound(2) == 31);
}

TEST_CASE("reduction pipeline solves tiny1 at the first radius") {
  SupplierInstance inst = tiny1();
  auto result = solve_via_reduction(inst, FcpSolverKind::Knapsack);
  REQUIRE(result.has_value());
  CHECK(result->radius_guess == 1);
  CHECK(result->factor_bound == 11);
  CHECK(result->solution.radius == 11);
  CHECK(result->solution.centers == std::vector<std::size_t>{0});
  CHECK(result->solution.feasible);

  auto opt = brute_force_optimal(inst);
  REQUIRE(opt.has_value());
  CHECK(opt->radius == 1);
  CHECK(result->solution.radius <= result->factor_bound * opt->radius);
}

TEST_CASE("zero requirements solve with the empty set at radius zero") {
  SupplierInstance inst = tiny1();
  inst.requirements = {0};
  auto result = solve_via_reduction(inst, FcpSolverKind::Knapsack);
  REQUIRE(result.has_value());
  CHECK(result->radius_guess == 0);
  CHECK(result->solution.radius == 0);
  CHECK(result->solution.centers.empty());
}

TEST_CASE("solver kind must match the constraint") {
  SupplierInstance inst = tiny1();
  CHECK_THROWS_AS(solve_via_reduction(inst, FcpSolverKind::LinearMatroid),
                  std::invalid_argument);
}

TEST_CASE("infeasible instances return nothing") {
  SupplierInstance inst = tiny1();
  inst.requirements = {4};  // above the total weight
  CHECK_FALSE(solve_via_reduction(inst, FcpSolverKind::Knapsack).has_value());
}

TEST_CASE("knapsack ratio bound holds against the brute-force optimum") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenParams params;
    params.n_clients = 7;
    params.n_facilities = 4;
    params.gamma = 1 + static_cast<int>(seed % 2);
    params.seed = seed;
    SupplierInstance inst = generate_instance(params);
    auto opt = brute_force_optimal(inst);
    REQUIRE(opt.has_value());
    auto result = solve_via_reduction(inst, FcpSolverKind::Knapsack, seed);
    REQUIRE(result.has_value());
    CHECK(result->solution.feasible);
    CHECK(result->solution.radius <= reduction_factor_bound(params.gamma) * opt->radius);
    SupplierSolution recheck = check_solution(inst, result->solution.centers,
                                              result->solution.radius);
    CHECK(recheck.feasible);
  }
}

TEST_CASE("matroid ratio bound holds against the brute-force optimum") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GenParams params;
    params.n_clients = 6;
    params.n_facilities = 4;
    params.gamma = 1;
    params.constraint_kind = GenParams::Kind::LinearMatroid;
    params.matroid_rank = 2;
    params.seed = 100 + seed;
    SupplierInstance inst = generate_instance(params);
    auto opt = brute_force_optimal(inst);
    REQUIRE(opt.has_value());
    auto result = solve_via_reduction(inst, FcpSolverKind::LinearMatroid, seed);
    REQUIRE(result.has_value());
    CHECK(result->solution.feasible);
    CHECK(result->solution.radius <= 11 * opt->radius);
  }
}

TEST_CASE("reduction reports are reproducible") {
  GenParams params;
  params.n_clients = 6;
  params.n_facilities = 3;
  params.gamma = 2;
  params.seed = 5;
  SupplierInstance inst = generate_instance(params);
  auto a = solve_via_reduction(inst, FcpSolverKind::Knapsack, 9);
  auto b = solve_via_reduction(inst, FcpSolverKind::Knapsack, 9);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(reduction_report_json(inst, *a, std::nullopt, std::nullopt) ==
        reduction_report_json(inst, *b, std::nullopt, std::nullopt));
}

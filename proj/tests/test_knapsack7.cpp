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

#include "chroma/core.hpp"
#include "chroma/errors.hpp"
#include "chroma/harness.hpp"
#include "chroma/json_io.hpp"
#include "chroma/knapsack7.hpp"
#include "chroma/reduction.hpp"
#include "test_util.hpp"

using namespace chroma;
using testing::tiny1;

namespace {

// Two clients far apart; one cheap facility sits 3r from the second client so
// the fractional rounding has a non-expensive fallback within 5r.
SupplierInstance sparse_fixture() {
  SupplierInstance inst;
  inst.space.clients = {"a", "b"};
  inst.space.facilities = {"fa", "fb", "fc"};
  inst.space.gamma = 1;
  inst.space.weights = {{3, 2}};
  // positions: a=0, b=100, fa=0, fb=110, fc=130; r = 10.
  inst.space.dist = {
      0,   100, 0,   110, 130,  //
      100, 0,   100, 10,  30,   //
      0,   100, 0,   110, 130,  //
      110, 10,  110, 0,   20,   //
      130, 30,  130, 20,  0,    //
  };
  inst.requirements = {4};
  inst.constraint.value = KnapsackConstraint{{5, 5, 1}, 8};
  return inst;
}

PhaseState full_state(const SupplierInstance& inst) {
  PhaseState state;
  for (std::size_t c = 0; c < inst.space.num_clients(); ++c) state.clients.push_back(c);
  for (std::size_t f = 0; f < inst.space.num_facilities(); ++f) state.facilities.push_back(f);
  state.requirements = inst.requirements;
  state.budget = inst.constraint.knapsack().budget;
  state.tau.assign(inst.space.gamma, 0);
  return state;
}

}  // namespace

TEST_CASE("flower and gain on tiny1") {
  SupplierInstance inst = tiny1();
  FlowerGain fg = flower_gain(inst.space, 0, 0, 1);
  CHECK(fg.flower == std::vector<std::size_t>{0, 1});
  CHECK(fg.gains == std::vector<long long>{0});

  CHECK_THROWS_AS(flower_gain(inst.space, 1, 0, 1), FacilityTooFar);
}

TEST_CASE("gain vanishes when the flower equals the facility ball") {
  // Two co-located facilities with identical balls.
  SupplierInstance inst;
  inst.space.clients = {"a", "b"};
  inst.space.facilities = {"f", "g"};
  inst.space.gamma = 1;
  inst.space.weights = {{1, 1}};
  inst.space.dist = {
      0, 2, 1, 1,  //
      2, 0, 1, 1,  //
      1, 1, 0, 0,  //
      1, 1, 0, 0,  //
  };
  inst.requirements = {1};
  inst.constraint.value = KnapsackConstraint{{1, 1}, 2};
  CHECK(flower_gain(inst.space, 0, 0, 1).gains == std::vector<long long>{0});
  CHECK(flower_gain(inst.space, 1, 0, 1).gains == std::vector<long long>{0});
}

TEST_CASE("phase 0 with an empty guess only charges gamma * sigma = 0") {
  SupplierInstance inst = tiny1();
  auto state = phase0_apply(inst, 1, {});
  REQUIRE(state.has_value());
  CHECK(state->sigma == 0);
  CHECK(state->budget == 1);
  CHECK(state->clients.size() == 3);
  CHECK(state->facilities.size() == 2);
  CHECK(state->requirements == inst.requirements);
}

TEST_CASE("phase 0 cost guessing on tiny1") {
  SupplierInstance inst = tiny1();

  SUBCASE("with budget 3 the pair (f2, f1) is absorbed") {
    inst.constraint.value = KnapsackConstraint{{1, 1}, 3};
    auto state = phase0_apply(inst, 1, {{1, 0}});
    REQUIRE(state.has_value());
    CHECK(state->sigma == 1);
    CHECK(state->s_kappa == std::vector<std::size_t>{0});
    CHECK(state->removed_region == std::vector<std::size_t>{0, 1});
    CHECK(state->facilities.empty());
    CHECK(state->clients.empty());  // every client is within 5r of f1
    CHECK(state->requirements == std::vector<long long>{0});
    CHECK(state->budget == 1);  // 3 - kappa(f1) - 1*sigma
  }

  SUBCASE("the original budget 1 cannot pay for the guess") {
    CHECK_FALSE(phase0_apply(inst, 1, {{1, 0}}).has_value());
  }

  SUBCASE("well-separated pairs are inconsistent") {
    // At r = 0 the pair distance 4 exceeds 4r.
    CHECK_THROWS_AS(phase0_apply(inst, 0, {{1, 0}}), InconsistentGuess);
  }

  SUBCASE("a pair must name two distinct facilities") {
    CHECK_THROWS_AS(phase0_apply(inst, 1, {{0, 0}}), InconsistentGuess);
  }
}

TEST_CASE("phase 1 color guessing") {
  SupplierInstance inst = tiny1();
  inst.constraint.value = KnapsackConstraint{{1, 1}, 5};
  auto state0 = phase0_apply(inst, 1, {});
  REQUIRE(state0.has_value());

  SUBCASE("empty blocks keep the state and zero the thresholds") {
    auto state1 = phase1_apply(inst, *state0, 1, {{}});
    REQUIRE(state1.has_value());
    CHECK(state1->tau == std::vector<long long>{0});
    CHECK(state1->clients.size() == 3);
    CHECK(state1->budget == 5);
  }

  SUBCASE("a partial block opens its facilities but leaves tau at zero") {
    auto state1 = phase1_apply(inst, *state0, 1, {{{0, 0}}});
    REQUIRE(state1.has_value());
    CHECK(state1->s_w == std::vector<std::size_t>{0});
    CHECK(state1->tau == std::vector<long long>{0});
    // f1 covers c1, c2 within r; they leave the instance at 3r.
    CHECK(state1->requirements == std::vector<long long>{0});
    CHECK(state1->clients == std::vector<std::size_t>{2});
    CHECK(state1->facilities == std::vector<std::size_t>{1});
    CHECK(state1->budget == 4);
  }

  SUBCASE("cheap facilities cannot be guessed") {
    PhaseState expensive_free = *state0;
    expensive_free.sigma = 1;  // no facility costs more than 1
    CHECK_THROWS_AS(phase1_apply(inst, expensive_free, 1, {{{0, 0}}}), InconsistentGuess);
  }
}

TEST_CASE("a full phase-1 block records the gain of its last pair") {
  SupplierInstance inst;
  inst.space.gamma = 1;
  inst.space.clients = {"c0", "c1", "c2", "c3"};
  inst.space.facilities = {"f0", "f1", "f2", "f3"};
  inst.space.weights = {{1, 1, 1, 1}};
  // Everything on a line at 0, 10, 20, 30; facilities co-located with
  // clients; r = 10.
  std::vector<long long> pos{0, 10, 20, 30, 0, 10, 20, 30};
  inst.space.dist.assign(64, 0);
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) inst.space.dist[a * 8 + b] = std::abs(pos[a] - pos[b]);
  }
  inst.requirements = {0};
  inst.constraint.value = KnapsackConstraint{{5, 5, 5, 5}, 25};

  auto state0 = phase0_apply(inst, 10, {});
  REQUIRE(state0.has_value());
  auto state1 = phase1_apply(inst, *state0, 10, {{{0, 0}, {1, 1}, {2, 2}, {3, 3}}});
  REQUIRE(state1.has_value());
  // Flower(c3) = {c1,c2,c3}; outside B(f3,r) = {c2,c3} only c1 remains.
  CHECK(state1->tau == std::vector<long long>{1});
  CHECK(state1->s_w == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("dense decomposition on the tiny1 empty-guess state") {
  SupplierInstance inst = tiny1();
  auto state0 = phase0_apply(inst, 1, {});
  REQUIRE(state0.has_value());
  auto state1 = phase1_apply(inst, *state0, 1, {{}});
  REQUIRE(state1.has_value());

  DenseDecomposition dense = dense_decomposition(inst, *state1, 1);
  REQUIRE(dense.clusters.size() == 2);
  CHECK(dense.clusters[0].clients == std::vector<std::size_t>{0, 1});
  CHECK(dense.clusters[0].core == std::vector<std::size_t>{0});
  CHECK(dense.clusters[1].clients == std::vector<std::size_t>{2});
  CHECK(dense.clusters[1].core == std::vector<std::size_t>{1});
  CHECK(dense.dense_clients == std::vector<std::size_t>{0, 1, 2});

  SUBCASE("clusters are covered by their cores within 5r") {
    for (const auto& cluster : dense.clusters) {
      for (std::size_t g : cluster.core) {
        for (std::size_t c : cluster.clients) {
          CHECK(inst.space.client_facility_dist(c, g) <= 5 * 1);
        }
      }
    }
  }

  SUBCASE("large thresholds kill density") {
    PhaseState lazy = *state1;
    lazy.tau = {10};
    CHECK(dense_decomposition(inst, lazy, 1).clusters.empty());
  }

  SUBCASE("no expensive facilities means no dense part") {
    PhaseState cheap = *state1;
    cheap.sigma = 1;  // every cost equals 1, nothing is expensive
    CHECK(dense_decomposition(inst, cheap, 1).clusters.empty());
  }
}

TEST_CASE("dense cover solver") {
  SupplierInstance inst = tiny1();
  auto state0 = phase0_apply(inst, 1, {});
  auto state1 = phase1_apply(inst, *state0, 1, {{}});
  DenseDecomposition dense = dense_decomposition(inst, *state1, 1);

  SUBCASE("zero targets select nothing") {
    auto sol = solve_dense(inst, dense, {0});
    REQUIRE(sol.has_value());
    CHECK(sol->facilities.empty());
    CHECK(sol->cost == 0);
  }

  SUBCASE("a single cluster suffices for small targets") {
    auto sol = solve_dense(inst, dense, {2});
    REQUIRE(sol.has_value());
    CHECK(sol->facilities == std::vector<std::size_t>{0});
    CHECK(sol->cost == 1);
  }

  SUBCASE("forcing both clusters matches the two-variable brute force") {
    auto sol = solve_dense(inst, dense, {3});
    REQUIRE(sol.has_value());
    CHECK(sol->facilities == std::vector<std::size_t>{0, 1});
    CHECK(sol->cost == 2);
  }

  SUBCASE("unreachable targets are infeasible") {
    CHECK_FALSE(solve_dense(inst, dense, {4}).has_value());
  }
}

TEST_CASE("sparse rounding with no residual requirement opens nothing") {
  SupplierInstance inst = tiny1();
  PhaseState state = full_state(inst);
  state.requirements = {0};
  auto sol = solve_sparse(inst, state, 1);
  REQUIRE(sol.has_value());
  CHECK(sol->facilities.empty());
  CHECK(sol->lp_fractionals == 0);
}

TEST_CASE("sparse rounding opens the cheapest facility for integral flowers") {
  // sigma at the cost ceiling: no facility is expensive, no exclusions.
  SupplierInstance inst = tiny1();
  PhaseState state = full_state(inst);
  state.sigma = 1;
  auto sol = solve_sparse(inst, state, 1);
  REQUIRE(sol.has_value());
  CHECK(sol->facilities == std::vector<std::size_t>{0});
  CHECK(sol->lp_fractionals == 0);
}

TEST_CASE("sparse rounding falls back to a cheap 5r facility on fractional flowers") {
  SupplierInstance inst = sparse_fixture();
  PhaseState state = full_state(inst);
  state.sigma = 1;
  state.tau = {1};
  auto sol = solve_sparse(inst, state, 10);
  REQUIRE(sol.has_value());
  CHECK(sol->lp_fractionals == 1);
  CHECK(sol->facilities == std::vector<std::size_t>{0, 2});
  // Budget excess stays within gamma * sigma.
  long long cost = 0;
  for (std::size_t f : sol->facilities) cost += inst.constraint.knapsack().costs[f];
  CHECK(cost <= state.budget + 1 * state.sigma);
}

TEST_CASE("flower lp points satisfy their structural invariants") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenParams params;
    params.n_clients = 6;
    params.n_facilities = 4;
    params.gamma = 1;
    params.max_dist = 12;
    params.seed = 600 + seed;
    SupplierInstance inst = generate_instance(params);
    PhaseState state = full_state(inst);
    state.sigma = 2;  // keep some facilities inexpensive
    state.tau = {2};
    auto point = flower_lp_point(inst, state, 3);
    if (!point.has_value()) continue;

    // Groups are disjoint and the vertex has at most gamma fractional
    // entries; lifted values exist exactly for grouped clients.
    std::vector<char> grouped(inst.space.num_clients(), 0);
    for (const auto& group : point->groups) {
      for (std::size_t b : group) {
        CHECK_FALSE(grouped[b]);
        grouped[b] = 1;
      }
    }
    std::size_t fractional = 0;
    for (const Rational& z : point->z) {
      if (sgn(z) != 0 && z != 1) ++fractional;
    }
    CHECK(fractional <= 1);
    for (std::size_t i = 0; i < state.clients.size(); ++i) {
      if (sgn(point->lifted[i]) > 0) CHECK(grouped[state.clients[i]]);
    }
  }
}

TEST_CASE("sparse rounding reports infeasibility for impossible residuals") {
  SupplierInstance inst = tiny1();
  PhaseState state = full_state(inst);
  state.requirements = {4};  // beyond the total weight
  CHECK_FALSE(solve_sparse(inst, state, 1).has_value());
}

TEST_CASE("the 7-approximation solves tiny1 within factor 7") {
  SupplierInstance inst = tiny1();
  auto result = solve_knapsack7(inst);
  REQUIRE(result.has_value());
  CHECK(result->factor_bound == 7);
  CHECK(result->radius_guess == 1);
  CHECK(result->solution.radius == 7);
  CHECK(result->solution.feasible);
  auto opt = brute_force_optimal(inst);
  CHECK(result->solution.radius <= 7 * opt->radius);
}

TEST_CASE("zero requirements produce the empty solution at radius zero") {
  SupplierInstance inst = tiny1();
  inst.requirements = {0};
  auto result = solve_knapsack7(inst);
  REQUIRE(result.has_value());
  CHECK(result->solution.centers.empty());
  CHECK(result->radius_guess == 0);
}

TEST_CASE("phase states shrink monotonically") {
  SupplierInstance inst = tiny1();
  inst.constraint.value = KnapsackConstraint{{1, 1}, 4};
  auto state0 = phase0_apply(inst, 1, {{1, 0}});
  REQUIRE(state0.has_value());
  CHECK(state0->clients.size() <= inst.space.num_clients());
  CHECK(state0->facilities.size() <= inst.space.num_facilities());
  CHECK(state0->budget <= inst.constraint.knapsack().budget);
  for (int l = 0; l < inst.space.gamma; ++l) {
    CHECK(state0->requirements[l] <= inst.requirements[l]);
    CHECK(state0->requirements[l] >= 0);
  }
}

TEST_CASE("ratio bound 7 holds against the brute-force optimum") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GenParams params;
    params.n_clients = 6;
    params.n_facilities = 4;
    params.gamma = 1;
    params.max_dist = 12;
    params.seed = 40 + seed;
    SupplierInstance inst = generate_instance(params);
    auto opt = brute_force_optimal(inst);
    REQUIRE(opt.has_value());
    auto result = solve_knapsack7(inst);
    REQUIRE(result.has_value());
    CHECK(result->solution.feasible);
    CHECK(result->solution.radius <= 7 * opt->radius);
    long long cost = 0;
    for (std::size_t f : result->solution.centers)
      cost += inst.constraint.knapsack().costs[f];
    CHECK(cost <= inst.constraint.knapsack().budget);
  }
}

TEST_CASE("dense clusters stay disjoint from the sparse residual and near their cores") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenParams params;
    params.n_clients = 6;
    params.n_facilities = 4;
    params.gamma = 1 + static_cast<int>(seed % 2);
    params.max_dist = 12;
    params.seed = 700 + seed;
    SupplierInstance inst = generate_instance(params);
    for (long long r : radius_candidates(inst.space)) {
      auto state0 = phase0_apply(inst, r, {});
      REQUIRE(state0.has_value());
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> empty_blocks(
          inst.space.gamma);
      auto state1 = phase1_apply(inst, *state0, r, empty_blocks);
      REQUIRE(state1.has_value());
      DenseDecomposition dense = dense_decomposition(inst, *state1, r);
      std::vector<char> taken(inst.space.num_clients(), 0);
      for (const auto& cluster : dense.clusters) {
        for (std::size_t c : cluster.clients) {
          CHECK_FALSE(taken[c]);
          taken[c] = 1;
        }
        REQUIRE_FALSE(cluster.core.empty());
        for (std::size_t g : cluster.core) {
          for (std::size_t c : cluster.clients) {
            CHECK(inst.space.client_facility_dist(c, g) <= 5 * r);
          }
        }
      }
      for (std::size_t c : dense.dense_clients) CHECK(taken[c]);
    }
  }
}

TEST_CASE("ratio bound 7 also holds with two colors at tiny scale") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GenParams params;
    params.n_clients = 5;
    params.n_facilities = 3;
    params.gamma = 2;
    params.max_dist = 10;
    params.seed = 4000 + seed;
    SupplierInstance inst = generate_instance(params);
    auto opt = brute_force_optimal(inst);
    REQUIRE(opt.has_value());
    auto result = solve_knapsack7(inst);
    REQUIRE(result.has_value());
    CHECK(result->solution.feasible);
    CHECK(result->solution.radius <= 7 * opt->radius);
  }
}

TEST_CASE("both knapsack solvers respect their bounds on shared instances") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GenParams params;
    params.n_clients = 6;
    params.n_facilities = 4;
    params.gamma = 1;
    params.max_dist = 12;
    params.seed = 5000 + seed;
    SupplierInstance inst = generate_instance(params);
    auto opt = brute_force_optimal(inst);
    REQUIRE(opt.has_value());
    auto pipeline = solve_via_reduction(inst, FcpSolverKind::Knapsack, seed);
    auto dedicated = solve_knapsack7(inst);
    REQUIRE(pipeline.has_value());
    REQUIRE(dedicated.has_value());
    CHECK(pipeline->solution.radius <= 11 * opt->radius);
    CHECK(dedicated->solution.radius <= 7 * opt->radius);
  }
}

TEST_CASE("tight budgets engage the cost-guessing phase") {
  // Costs (7,3,3,7) against budget 10: no composition without a banked
  // saving pays for enough coverage, so the accepted one carries sigma > 0.
  GenParams params;
  params.n_clients = 6;
  params.n_facilities = 4;
  params.gamma = 1;
  params.max_dist = 12;
  params.seed = 30011;
  SupplierInstance inst = generate_instance(params);
  auto result = solve_knapsack7(inst);
  REQUIRE(result.has_value());
  CHECK(result->solution.feasible);
  CHECK(result->sigma > 0);
  auto opt = brute_force_optimal(inst);
  REQUIRE(opt.has_value());
  CHECK(result->solution.radius <= 7 * opt->radius);
}

TEST_CASE("knapsack7 reports are reproducible") {
  GenParams params;
  params.n_clients = 5;
  params.n_facilities = 3;
  params.gamma = 1;
  params.max_dist = 12;
  params.seed = 77;
  SupplierInstance inst = generate_instance(params);
  auto a = solve_knapsack7(inst);
  auto b = solve_knapsack7(inst);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(knapsack7_report_json(inst, *a, std::nullopt, std::nullopt) ==
        knapsack7_report_json(inst, *b, std::nullopt, std::nullopt));
}

TEST_CASE("the enumeration limit trips") {
  SupplierInstance inst = tiny1();
  Knapsack7Limits limits;
  limits.max_nodes = 1;
  CHECK_THROWS_AS(solve_knapsack7(inst, limits), GuessSpaceExceeded);
}

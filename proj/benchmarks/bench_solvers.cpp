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

#include <benchmark/benchmark.h>

#include "chroma/core.hpp"
#include "chroma/fcp.hpp"
#include "chroma/harness.hpp"
#include "chroma/knapsack7.hpp"
#include "chroma/linmat.hpp"
#include "chroma/partition.hpp"
#include "chroma/rng.hpp"
#include "chroma/reduction.hpp"

namespace {

chroma::SupplierInstance bench_instance(std::uint64_t seed, std::size_t clients,
                                        std::size_t facilities, int gamma) {
  chroma::GenParams params;
  params.n_clients = clients;
  params.n_facilities = facilities;
  params.gamma = gamma;
  params.seed = seed;
  return chroma::generate_instance(params);
}

void BM_BuildPartition(benchmark::State& state) {
  auto inst = bench_instance(1, static_cast<std::size_t>(state.range(0)), 6, 2);
  long long r = chroma::radius_candidates(inst.space).front();
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::build_partition(inst.space, r));
  }
}
BENCHMARK(BM_BuildPartition)->Arg(10)->Arg(30)->Arg(60);

void BM_CoverDp(benchmark::State& state) {
  auto inst = bench_instance(2, static_cast<std::size_t>(state.range(0)), 6, 2);
  long long r = chroma::radius_candidates(inst.space).back();
  chroma::Partition partition = chroma::build_partition(inst.space, r);
  chroma::FcpInstance fcp =
      chroma::build_fcp(inst.space, partition, r, inst.requirements, inst.constraint);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::solve_fcp_knapsack(fcp));
  }
}
BENCHMARK(BM_CoverDp)->Arg(12)->Arg(24);

void BM_Xwi(benchmark::State& state) {
  chroma::XwiQuery query;
  query.matrix = chroma::PrimeFieldMatrix(2147483647, 4, static_cast<std::size_t>(state.range(0)));
  chroma::Rng rng(7);
  for (auto& e : query.matrix.entries) e = static_cast<long long>(rng.below(2147483647));
  for (std::size_t j = 0; j < query.matrix.cols; ++j) query.weights.push_back(rng.between(0, 3));
  query.target = 5;
  query.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::xwi(query));
  }
}
BENCHMARK(BM_Xwi)->Arg(6)->Arg(10);

void BM_ReductionKnapsack(benchmark::State& state) {
  auto inst = bench_instance(3, static_cast<std::size_t>(state.range(0)), 5, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::solve_via_reduction(inst, chroma::FcpSolverKind::Knapsack, 1));
  }
}
BENCHMARK(BM_ReductionKnapsack)->Arg(8)->Arg(16);

void BM_Knapsack7(benchmark::State& state) {
  chroma::GenParams params;
  params.n_clients = 6;
  params.n_facilities = static_cast<std::size_t>(state.range(0));
  params.gamma = 1;
  params.max_dist = 12;
  params.seed = 4;
  auto inst = chroma::generate_instance(params);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chroma::solve_knapsack7(inst));
  }
}
BENCHMARK(BM_Knapsack7)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

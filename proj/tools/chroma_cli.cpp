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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/core.hpp"
#include "chroma/errors.hpp"
#include "chroma/fcp.hpp"
#include "chroma/harness.hpp"
#include "chroma/json_io.hpp"
#include "chroma/knapsack7.hpp"
#include "chroma/linmat.hpp"
#include "chroma/partition.hpp"
#include "chroma/reduction.hpp"

namespace {

std::uint64_t default_seed() {
  const char* env = std::getenv("CHROMA_SEED");
  if (env == nullptr) return 0;
  return std::strtoull(env, nullptr, 10);
}

long long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  out << text << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chroma::ValidationError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_solve(const std::string& input, const std::string& algorithm, std::uint64_t seed,
              const std::string& output, unsigned long long max_guesses, bool with_exact) {
  chroma::SupplierInstance instance =
      chroma::normalize_and_validate(chroma::load_instance(input));
  std::optional<long long> opt_radius;
  if (with_exact) {
    auto opt = chroma::brute_force_optimal(instance);
    if (opt.has_value()) opt_radius = opt->radius;
  }

  auto start = std::chrono::steady_clock::now();
  if (algorithm == "reduction") {
    chroma::FcpSolverKind kind = instance.constraint.is_knapsack()
                                     ? chroma::FcpSolverKind::Knapsack
                                     : chroma::FcpSolverKind::LinearMatroid;
    auto result = chroma::solve_via_reduction(instance, kind, seed);
    long long ms = elapsed_ms(start);
    if (!result.has_value()) {
      write_or_print(output, chroma::infeasible_report_json(ms));
      return 1;
    }
    write_or_print(output, chroma::reduction_report_json(instance, *result, opt_radius, ms));
    return 0;
  }
  if (algorithm == "knapsack7") {
    chroma::Knapsack7Limits limits;
    if (max_guesses > 0) limits.max_nodes = max_guesses;
    auto result = chroma::solve_knapsack7(instance, limits);
    long long ms = elapsed_ms(start);
    if (!result.has_value()) {
      write_or_print(output, chroma::infeasible_report_json(ms));
      return 1;
    }
    write_or_print(output, chroma::knapsack7_report_json(instance, *result, opt_radius, ms));
    return 0;
  }
  std::cerr << "unknown algorithm: " << algorithm << "\n";
  return 2;
}

int run_bench(const std::string& config_path, const std::string& out_path) {
  nlohmann::json config = nlohmann::json::parse(read_file(config_path));
  std::string algorithm = config.value("algorithm", std::string("reduction"));
  std::size_t count = config.value("count", std::size_t{10});
  std::uint64_t seed0 = config.value("seed", default_seed());

  chroma::GenParams params;
  if (config.contains("gen")) {
    const auto& g = config["gen"];
    params.n_clients = g.value("clients", params.n_clients);
    params.n_facilities = g.value("facilities", params.n_facilities);
    params.gamma = g.value("gamma", params.gamma);
    params.max_dist = g.value("max_dist", params.max_dist);
    params.weight_max = g.value("weight_max", params.weight_max);
    params.cost_max = g.value("cost_max", params.cost_max);
    params.matroid_rank = g.value("rank", params.matroid_rank);
    params.prime = g.value("prime", params.prime);
    if (g.value("constraint", std::string("knapsack")) == "linear_matroid")
      params.constraint_kind = chroma::GenParams::Kind::LinearMatroid;
  }

  std::ofstream csv(out_path);
  if (!csv) throw chroma::ValidationError("cannot write " + out_path);
  csv << "seed,opt_radius,alg_radius,ratio,feasible,wall_ms\n";

  for (std::size_t i = 0; i < count; ++i) {
    params.seed = seed0 + i;
    chroma::SupplierInstance instance = chroma::generate_instance(params);
    auto opt = chroma::brute_force_optimal(instance);
    auto start = std::chrono::steady_clock::now();

    std::optional<chroma::SupplierSolution> solution;
    if (algorithm == "knapsack7") {
      auto result = chroma::solve_knapsack7(instance);
      if (result.has_value()) solution = result->solution;
    } else {
      chroma::FcpSolverKind kind = instance.constraint.is_knapsack()
                                       ? chroma::FcpSolverKind::Knapsack
                                       : chroma::FcpSolverKind::LinearMatroid;
      auto result = chroma::solve_via_reduction(instance, kind, params.seed);
      if (result.has_value()) solution = result->solution;
    }
    long long ms = elapsed_ms(start);

    csv << params.seed << ",";
    if (opt.has_value()) csv << opt->radius;
    csv << ",";
    if (solution.has_value()) csv << solution->radius;
    csv << ",";
    if (opt.has_value() && solution.has_value()) {
      if (opt->radius == 0) {
        csv << (solution->radius == 0 ? "1" : "inf");
      } else {
        csv << static_cast<double>(solution->radius) / static_cast<double>(opt->radius);
      }
    }
    csv << "," << (solution.has_value() && solution->feasible ? 1 : 0) << "," << ms << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvers for colorful supplier clustering with facility constraints"};
  app.require_subcommand(1);

  // solve
  std::string solve_input, solve_output, solve_algorithm = "reduction";
  std::uint64_t solve_seed = default_seed();
  unsigned long long solve_max_guesses = 0;
  bool solve_exact = false;
  CLI::App* solve = app.add_subcommand("solve", "run an approximation algorithm on an instance");
  solve->add_option("--input", solve_input, "instance JSON file")->required();
  solve->add_option("--algorithm", solve_algorithm, "reduction or knapsack7");
  solve->add_option("--seed", solve_seed, "seed for randomized components");
  solve->add_option("--output", solve_output, "report file (stdout when omitted)");
  solve->add_option("--max-guesses", solve_max_guesses, "enumeration node limit for knapsack7");
  solve->add_flag("--exact", solve_exact, "also run the brute-force oracle and report opt_radius");

  // exact
  std::string exact_input;
  CLI::App* exact = app.add_subcommand("exact", "brute-force optimum of an instance");
  exact->add_option("--input", exact_input, "instance JSON file")->required();

  // gen
  std::string gen_out, gen_constraint = "knapsack";
  chroma::GenParams gen_params;
  gen_params.seed = default_seed();
  CLI::App* gen = app.add_subcommand("gen", "generate a random feasible instance");
  gen->add_option("--out", gen_out, "output file")->required();
  gen->add_option("--clients", gen_params.n_clients, "number of clients");
  gen->add_option("--facilities", gen_params.n_facilities, "number of facilities");
  gen->add_option("--gamma", gen_params.gamma, "number of colors");
  gen->add_option("--constraint", gen_constraint, "knapsack or linear_matroid");
  gen->add_option("--max-dist", gen_params.max_dist, "line length");
  gen->add_option("--weight-max", gen_params.weight_max, "maximum client weight");
  gen->add_option("--cost-max", gen_params.cost_max, "maximum facility cost");
  gen->add_option("--rank", gen_params.matroid_rank, "matroid rank");
  gen->add_option("--prime", gen_params.prime, "matroid field modulus");
  gen->add_option("--seed", gen_params.seed, "generator seed");

  // bench
  std::string bench_config, bench_out;
  CLI::App* bench = app.add_subcommand("bench", "batch experiment emitting a CSV");
  bench->add_option("--config", bench_config, "config JSON file")->required();
  bench->add_option("--out", bench_out, "CSV output path")->required();

  // verify-partition
  std::string vp_input, vp_mode = "exhaustive";
  long long vp_radius = 0;
  std::uint64_t vp_seed = default_seed();
  CLI::App* vp = app.add_subcommand("verify-partition",
                                    "build a partition for a radius and verify its properties");
  vp->add_option("--input", vp_input, "instance JSON file")->required();
  vp->add_option("--radius", vp_radius, "radius guess r")->required();
  vp->add_option("--mode", vp_mode, "diameter, exhaustive or sample:N");
  vp->add_option("--seed", vp_seed, "seed for sampled mode");

  // fcp-solve
  std::string fcp_input;
  std::uint64_t fcp_seed = default_seed();
  CLI::App* fcp_cmd = app.add_subcommand("fcp-solve", "solve a cover instance directly");
  fcp_cmd->add_option("--input", fcp_input, "cover instance JSON file")->required();
  fcp_cmd->add_option("--seed", fcp_seed, "seed for the matroid solver");

  // xwb
  std::string xwb_input;
  long long xwb_target = 0;
  std::uint64_t xwb_seed = default_seed();
  int xwb_reps = 10;
  CLI::App* xwb_cmd = app.add_subcommand("xwb", "exact-weight independent set over a prime field");
  xwb_cmd->add_option("--input", xwb_input, "query JSON file {prime, matrix, weights}")->required();
  xwb_cmd->add_option("--target", xwb_target, "target weight")->required();
  xwb_cmd->add_option("--seed", xwb_seed, "seed");
  xwb_cmd->add_option("--reps", xwb_reps, "repetitions");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return run_solve(solve_input, solve_algorithm, solve_seed, solve_output, solve_max_guesses,
                       solve_exact);
    }
    if (exact->parsed()) {
      chroma::SupplierInstance instance =
          chroma::normalize_and_validate(chroma::load_instance(exact_input));
      auto opt = chroma::brute_force_optimal(instance);
      nlohmann::json j;
      if (opt.has_value()) {
        j["opt_radius"] = opt->radius;
        std::vector<std::string> ids;
        for (std::size_t f : opt->centers) ids.push_back(instance.space.facilities[f]);
        j["centers"] = ids;
      } else {
        j["infeasible"] = true;
      }
      std::cout << j.dump(2) << "\n";
      return opt.has_value() ? 0 : 1;
    }
    if (gen->parsed()) {
      if (gen_constraint == "linear_matroid")
        gen_params.constraint_kind = chroma::GenParams::Kind::LinearMatroid;
      chroma::save_instance(gen_out, chroma::generate_instance(gen_params));
      return 0;
    }
    if (bench->parsed()) {
      return run_bench(bench_config, bench_out);
    }
    if (vp->parsed()) {
      chroma::SupplierInstance instance =
          chroma::normalize_and_validate(chroma::load_instance(vp_input));
      chroma::Partition partition = chroma::build_partition(instance.space, vp_radius);
      chroma::VerifyOptions options;
      if (vp_mode == "diameter") {
        options.mode = chroma::VerifyMode::DiameterOnly;
      } else if (vp_mode == "exhaustive") {
        options.mode = chroma::VerifyMode::ExhaustiveZ;
      } else if (vp_mode.rfind("sample:", 0) == 0) {
        options.mode = chroma::VerifyMode::SampledZ;
        options.sample_count = std::strtoull(vp_mode.c_str() + 7, nullptr, 10);
        options.seed = vp_seed;
      } else {
        std::cerr << "unknown mode: " << vp_mode << "\n";
        return 2;
      }
      chroma::PartitionReport report =
          chroma::verify_partition(instance.space, partition, vp_radius, options);
      std::cout << chroma::partition_report_json(report) << "\n";
      return report.ok ? 0 : 1;
    }
    if (fcp_cmd->parsed()) {
      chroma::FcpInstance fcp = chroma::fcp_from_json(read_file(fcp_input));
      std::optional<std::vector<std::size_t>> family;
      long long cost = -1;
      if (fcp.constraint.is_knapsack()) {
        auto sol = chroma::solve_fcp_knapsack(fcp);
        if (sol.has_value()) {
          family = sol->family;
          cost = sol->cost;
        }
      } else {
        family = chroma::solve_fcp_linear_matroid(fcp, fcp_seed);
      }
      nlohmann::json j;
      if (family.has_value()) {
        j["family"] = *family;
        if (cost >= 0) j["cost"] = cost;
        j["covered"] = fcp.covered_by(*family);
      } else {
        j["infeasible"] = true;
      }
      std::cout << j.dump(2) << "\n";
      return family.has_value() ? 0 : 1;
    }
    if (xwb_cmd->parsed()) {
      chroma::XwbInstance query = chroma::xwb_from_json(read_file(xwb_input));
      chroma::XwiQuery q{query.matrix, query.weights, xwb_target, xwb_seed, xwb_reps};
      auto subset = chroma::xwi(q);
      if (subset.has_value()) {
        nlohmann::json j;
        j["subset"] = *subset;
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      std::cout << "none\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

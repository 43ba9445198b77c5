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

#include "chroma/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chroma/errors.hpp"

namespace chroma {

using nlohmann::json;

namespace {

json constraint_to_json(const FacilityConstraint& constraint) {
  json j;
  if (constraint.is_knapsack()) {
    j["type"] = "knapsack";
    j["costs"] = constraint.knapsack().costs;
    j["budget"] = constraint.knapsack().budget;
  } else {
    j["type"] = "linear_matroid";
    j["prime"] = constraint.linear_matroid().prime;
    j["columns"] = constraint.linear_matroid().columns;
  }
  return j;
}

FacilityConstraint constraint_from_json(const json& j) {
  FacilityConstraint constraint;
  std::string type = j.at("type").get<std::string>();
  if (type == "knapsack") {
    KnapsackConstraint k;
    k.costs = j.at("costs").get<std::vector<long long>>();
    k.budget = j.at("budget").get<long long>();
    constraint.value = std::move(k);
  } else if (type == "linear_matroid") {
    LinearMatroidConstraint lm;
    lm.prime = j.at("prime").get<long long>();
    lm.columns = j.at("columns").get<std::vector<std::vector<long long>>>();
    constraint.value = std::move(lm);
  } else {
    throw ValidationError("unknown constraint type: " + type);
  }
  return constraint;
}

std::vector<long long> flat_matrix(const json& j, std::size_t n) {
  std::vector<long long> dist;
  if (!j.empty() && j.front().is_array()) {
    for (const auto& row : j) {
      for (const auto& v : row) dist.push_back(v.get<long long>());
    }
  } else {
    dist = j.get<std::vector<long long>>();
  }
  if (dist.size() != n * n) throw ValidationError("dist must hold (clients+facilities)^2 entries");
  return dist;
}

}  // namespace

std::string instance_to_json(const SupplierInstance& instance) {
  json j;
  j["clients"] = instance.space.clients;
  j["facilities"] = instance.space.facilities;
  j["dist"] = instance.space.dist;
  j["gamma"] = instance.space.gamma;
  j["weights"] = instance.space.weights;
  j["requirements"] = instance.requirements;
  j["constraint"] = constraint_to_json(instance.constraint);
  return j.dump(2);
}

SupplierInstance instance_from_json(const std::string& text) {
  json j = json::parse(text);
  SupplierInstance inst;
  inst.space.clients = j.at("clients").get<std::vector<std::string>>();
  inst.space.facilities = j.at("facilities").get<std::vector<std::string>>();
  inst.space.gamma = j.at("gamma").get<int>();
  inst.space.dist = flat_matrix(j.at("dist"), inst.space.num_points());
  inst.space.weights = j.at("weights").get<std::vector<std::vector<long long>>>();
  inst.requirements = j.at("requirements").get<std::vector<long long>>();
  inst.constraint = constraint_from_json(j.at("constraint"));
  return inst;
}

std::string fcp_to_json(const FcpInstance& fcp) {
  json j;
  j["universe"] = fcp.universe;
  j["sets"] = fcp.sets;
  j["weights"] = fcp.weights;
  j["requirements"] = fcp.requirements;
  j["constraint"] = constraint_to_json(fcp.constraint);
  return j.dump(2);
}

FcpInstance fcp_from_json(const std::string& text) {
  json j = json::parse(text);
  FcpInstance fcp;
  fcp.universe = j.at("universe").get<std::vector<std::string>>();
  fcp.sets = j.at("sets").get<std::vector<std::vector<std::size_t>>>();
  fcp.weights = j.at("weights").get<std::vector<std::vector<long long>>>();
  fcp.requirements = j.at("requirements").get<std::vector<long long>>();
  fcp.constraint = constraint_from_json(j.at("constraint"));
  for (auto& members : fcp.sets) {
    for (std::size_t u : members) {
      if (u >= fcp.universe.size()) throw ValidationError("set member outside the universe");
    }
  }
  return fcp;
}

std::string xwb_to_json(const XwbInstance& xwb) {
  json j;
  j["prime"] = xwb.matrix.prime;
  std::vector<std::vector<long long>> rows(xwb.matrix.rows);
  for (std::size_t r = 0; r < xwb.matrix.rows; ++r) {
    for (std::size_t c = 0; c < xwb.matrix.cols; ++c) rows[r].push_back(xwb.matrix.at(r, c));
  }
  j["matrix"] = rows;
  j["weights"] = xwb.weights;
  return j.dump(2);
}

XwbInstance xwb_from_json(const std::string& text) {
  json j = json::parse(text);
  XwbInstance xwb;
  auto rows = j.at("matrix").get<std::vector<std::vector<long long>>>();
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  xwb.matrix = PrimeFieldMatrix(j.at("prime").get<long long>(), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ValidationError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) xwb.matrix.at(r, c) = rows[r][c];
  }
  xwb.weights = j.at("weights").get<std::vector<long long>>();
  if (xwb.weights.size() != cols) throw ValidationError("one weight per matrix column required");
  return xwb;
}

SupplierInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

void save_instance(const std::string& path, const SupplierInstance& instance) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  out << instance_to_json(instance) << "\n";
}

namespace {

json solution_json(const SupplierInstance& instance, const SupplierSolution& solution) {
  json j;
  j["radius"] = solution.radius;
  std::vector<std::string> ids;
  for (std::size_t f : solution.centers) ids.push_back(instance.space.facilities[f]);
  j["centers"] = ids;
  j["covered"] = solution.covered;
  return j;
}

}  // namespace

std::string reduction_report_json(const SupplierInstance& instance, const ReductionResult& result,
                                  std::optional<long long> opt_radius,
                                  std::optional<long long> wall_ms) {
  json j = solution_json(instance, result.solution);
  j["factor_bound"] = result.factor_bound;
  if (opt_radius.has_value()) j["opt_radius"] = *opt_radius;
  if (wall_ms.has_value()) j["wall_ms"] = *wall_ms;
  return j.dump(2);
}

std::string knapsack7_report_json(const SupplierInstance& instance, const Knapsack7Result& result,
                                  std::optional<long long> opt_radius,
                                  std::optional<long long> wall_ms) {
  json j = solution_json(instance, result.solution);
  j["factor_bound"] = result.factor_bound;
  if (opt_radius.has_value()) j["opt_radius"] = *opt_radius;
  if (wall_ms.has_value()) j["wall_ms"] = *wall_ms;
  j["guesses_tried"] = result.guesses_tried;
  j["phases"] = {{"sigma", result.sigma},
                 {"tau", result.tau},
                 {"dense_clusters", result.dense_clusters},
                 {"lp_fractionals", result.lp_fractionals}};
  return j.dump(2);
}

std::string infeasible_report_json(std::optional<long long> wall_ms) {
  json j;
  j["infeasible"] = true;
  if (wall_ms.has_value()) j["wall_ms"] = *wall_ms;
  return j.dump(2);
}

std::string partition_report_json(const PartitionReport& report) {
  json j;
  j["ok"] = report.ok;
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", v.kind}, {"detail", v.detail}});
  }
  j["violations"] = violations;
  j["witnesses_found"] = report.witnesses_found;
  return j.dump(2);
}

}  // namespace chroma

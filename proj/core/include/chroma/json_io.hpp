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

#ifndef CHROMA_JSON_IO_HPP
#define CHROMA_JSON_IO_HPP

#include <optional>
#include <string>

#include "chroma/fcp.hpp"
#include "chroma/harness.hpp"
#include "chroma/knapsack7.hpp"
#include "chroma/partition.hpp"
#include "chroma/reduction.hpp"
#include "chroma/types.hpp"

namespace chroma {

// Instance documents: {clients, facilities, dist, gamma, weights,
// requirements, constraint}. dist is the flat row-major matrix over clients
// then facilities; constraint is {"type":"knapsack","costs":[...],"budget":K}
// or {"type":"linear_matroid","prime":p,"columns":[[...],...]}.
std::string instance_to_json(const SupplierInstance& instance);
SupplierInstance instance_from_json(const std::string& text);

// Cover instances: {universe, sets, weights, requirements, constraint}.
std::string fcp_to_json(const FcpInstance& fcp);
FcpInstance fcp_from_json(const std::string& text);

// Exact-weight queries: {prime, matrix, weights} with matrix as row arrays.
std::string xwb_to_json(const XwbInstance& xwb);
XwbInstance xwb_from_json(const std::string& text);

SupplierInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const SupplierInstance& instance);

// Solver reports. Timing is optional so reports used for reproducibility
// comparisons can be byte-identical.
std::string reduction_report_json(const SupplierInstance& instance, const ReductionResult& result,
                                  std::optional<long long> opt_radius,
                                  std::optional<long long> wall_ms);
std::string knapsack7_report_json(const SupplierInstance& instance, const Knapsack7Result& result,
                                  std::optional<long long> opt_radius,
                                  std::optional<long long> wall_ms);
std::string infeasible_report_json(std::optional<long long> wall_ms);
std::string partition_report_json(const PartitionReport& report);

}  // namespace chroma

#endif  // CHROMA_JSON_IO_HPP

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

#ifndef CHROMA_PARTITION_HPP
#define CHROMA_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chroma/types.hpp"

namespace chroma {

/// Disjoint client groups covering all clients, with declared factor L and
/// radius r: every part has diameter <= L*r, and any facility set Z can be
/// matched injectively to nearby parts whose union dominates Z's coverage.
struct Partition {
  std::vector<std::vector<std::size_t>> parts;  // sorted client indices, creation order
  long long factor = 0;                         // L
  long long radius = 0;                         // r
  // Facility that created the part; absent for base-case singletons.
  std::vector<std::optional<std::size_t>> anchors;

  std::size_t size() const { return parts.size(); }
};

/// Selected subfamily of parts plus an injection into a facility set Z.
struct PartitionWitness {
  std::vector<std::size_t> selected_parts;      // indices into Partition::parts
  std::vector<std::size_t> assigned_facility;   // parallel to selected_parts
};

/// One greedy pass over the facilities: extends an (L,r)-partition of the
/// clients without the top color to a (2L+10,r)-partition of the full client
/// set. `color` is the index of the color being added. Throws UncoveredClient
/// if some participating client has no facility within r.
Partition greedy_extend(const ColorfulSpace& space, const Partition& base, int color,
                        long long radius);

/// Full induction: purges clients with no facility within r (restored as
/// singleton parts), starts from the singleton base case and extends one
/// color at a time. Returned factor is 10*(2^gamma - 1).
Partition build_partition(const ColorfulSpace& space, long long radius);

enum class VerifyMode { DiameterOnly, ExhaustiveZ, SampledZ };

struct PartitionViolation {
  std::string kind;    // "diameter", "disjoint_cover" or "witness"
  std::string detail;
};

struct PartitionReport {
  bool ok = true;
  std::vector<PartitionViolation> violations;
  std::size_t witnesses_found = 0;
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::DiameterOnly;
  std::size_t sample_count = 0;   // SampledZ only
  std::uint64_t seed = 0;         // SampledZ only
};

/// Checks that the partition structure is sound: disjoint cover and diameter
/// bound always; in ExhaustiveZ mode additionally searches, for every subset
/// Z of the facilities, a witness whose union dominates Z's per-color
/// coverage with an injective radius-r assignment. Violations are report
/// entries, not errors.
PartitionReport verify_partition(const ColorfulSpace& space, const Partition& partition,
                                 long long radius, const VerifyOptions& options);

/// Witness search for a single facility set; exposed for tests.
std::optional<PartitionWitness> find_witness(const ColorfulSpace& space,
                                             const Partition& partition, long long radius,
                                             const std::vector<std::size_t>& z);

}  // namespace chroma

#endif  // CHROMA_PARTITION_HPP

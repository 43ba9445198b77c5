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

#include "chroma/partition.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "chroma/core.hpp"
#include "chroma/errors.hpp"
#include "chroma/matching.hpp"
#include "chroma/rng.hpp"

namespace chroma {

bool saturating_matching_exists(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::size_t num_right) {
  BipartiteMatcher matcher(adjacency.size(), num_right);
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    for (std::size_t v : adjacency[u]) matcher.add_edge(u, v);
  }
  return matcher.solve() == adjacency.size();
}

namespace {

long long part_facility_dist(const ColorfulSpace& space, const std::vector<std::size_t>& part,
                             std::size_t f) {
  long long best = -1;
  for (std::size_t c : part) {
    long long d = space.client_facility_dist(c, f);
    if (best < 0 || d < best) best = d;
  }
  return best;  // -1 for an empty part
}

Partition greedy_extend_masked(const ColorfulSpace& space, const Partition& base, int color,
                               long long radius, const std::vector<char>* active) {
  const std::size_t nc = space.num_clients();
  const std::size_t nf = space.num_facilities();
  const auto& w = space.weights[color];

  std::vector<char> participating(nc, 0);
  for (const auto& part : base.parts) {
    for (std::size_t c : part) participating[c] = 1;
  }
  std::vector<char> top_color(nc, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    if (w[c] > 0 && (!active || (*active)[c])) {
      top_color[c] = 1;
      participating[c] = 1;
    }
  }
  for (std::size_t c = 0; c < nc; ++c) {
    if (!participating[c]) continue;
    bool covered_by_some = false;
    for (std::size_t f = 0; f < nf; ++f) {
      if (space.client_facility_dist(c, f) <= radius) {
        covered_by_some = true;
        break;
      }
    }
    if (!covered_by_some) throw UncoveredClient(c);
  }

  Partition out;
  out.factor = 2 * base.factor + 10;
  out.radius = radius;

  std::vector<char> picked(nf, 0);
  std::vector<char> taken(nc, 0);       // clients already placed in a new part
  std::vector<char> used(base.size(), 0);  // base parts already absorbed

  for (std::size_t step = 0; step < nf; ++step) {
    // Greedy choice: unpicked facility whose r-ball carries the most
    // not-yet-taken top-color weight; ties go to the lowest index.
    std::size_t best_f = nf;
    long long best_gain = -1;
    for (std::size_t f = 0; f < nf; ++f) {
      if (picked[f]) continue;
      long long gain = 0;
      for (std::size_t c = 0; c < nc; ++c) {
        if (top_color[c] && !taken[c] && space.client_facility_dist(c, f) <= radius) gain += w[c];
      }
      if (gain > best_gain) {
        best_gain = gain;
        best_f = f;
      }
    }
    assert(best_f < nf);
    picked[best_f] = 1;

    std::vector<std::size_t> part;
    for (std::size_t c = 0; c < nc; ++c) {
      if (top_color[c] && !taken[c] && space.client_facility_dist(c, best_f) <= 3 * radius) {
        part.push_back(c);
      }
    }
    for (std::size_t b = 0; b < base.size(); ++b) {
      if (used[b]) continue;
      long long d = part_facility_dist(space, base.parts[b], best_f);
      if (d >= 0 && d <= 5 * radius) {
        used[b] = 1;
        for (std::size_t c : base.parts[b]) {
          assert(!taken[c]);  // base parts are absorbed whole, never split
          part.push_back(c);
        }
      }
    }
    if (part.empty()) continue;
    for (std::size_t c : part) taken[c] = 1;
    std::sort(part.begin(), part.end());
    out.parts.push_back(std::move(part));
    out.anchors.push_back(best_f);
  }
  return out;
}

}  // namespace

Partition greedy_extend(const ColorfulSpace& space, const Partition& base, int color,
                        long long radius) {
  return greedy_extend_masked(space, base, color, radius, nullptr);
}

Partition build_partition(const ColorfulSpace& space, long long radius) {
  const std::size_t nc = space.num_clients();
  const std::size_t nf = space.num_facilities();

  std::vector<char> reachable(nc, 0);
  for (std::size_t c = 0; c < nc; ++c) {
    for (std::size_t f = 0; f < nf; ++f) {
      if (space.client_facility_dist(c, f) <= radius) {
        reachable[c] = 1;
        break;
      }
    }
  }

  // Base case: singletons of the reachable clients that carry no color.
  Partition current;
  current.factor = 0;
  current.radius = radius;
  for (std::size_t c = 0; c < nc; ++c) {
    if (!reachable[c]) continue;
    bool colored = false;
    for (int l = 0; l < space.gamma; ++l) colored = colored || space.weights[l][c] > 0;
    if (!colored) {
      current.parts.push_back({c});
      current.anchors.push_back(std::nullopt);
    }
  }

  for (int l = 0; l < space.gamma; ++l) {
    current = greedy_extend_masked(space, current, l, radius, &reachable);
  }

  // Unreachable clients come back as singleton parts; diam({c}) = 0 keeps
  // the factor unchanged.
  for (std::size_t c = 0; c < nc; ++c) {
    if (!reachable[c]) {
      current.parts.push_back({c});
      current.anchors.push_back(std::nullopt);
    }
  }
  return current;
}

namespace {

std::vector<long long> part_weights(const ColorfulSpace& space,
                                    const std::vector<std::size_t>& part) {
  std::vector<long long> w(space.gamma, 0);
  for (std::size_t c : part) {
    for (int l = 0; l < space.gamma; ++l) w[l] += space.weights[l][c];
  }
  return w;
}

bool geq_all(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

struct WitnessSearch {
  const ColorfulSpace& space;
  const std::vector<std::size_t>& z;
  const std::vector<std::size_t>& candidates;                // part indices
  const std::vector<std::vector<std::size_t>>& cand_edges;   // z-positions within r
  const std::vector<std::vector<long long>>& cand_weights;
  const std::vector<std::vector<long long>>& suffix_weights;  // inclusive suffix sums
  const std::vector<long long>& target;
  std::vector<std::size_t> selected;  // candidate positions

  bool matchable() const {
    std::vector<std::vector<std::size_t>> adj;
    adj.reserve(selected.size());
    for (std::size_t pos : selected) adj.push_back(cand_edges[pos]);
    return saturating_matching_exists(adj, z.size());
  }

  bool dfs(std::size_t idx, std::vector<long long>& acc) {
    if (geq_all(acc, target)) return true;
    if (idx == candidates.size()) return false;
    // Even taking every remaining candidate cannot reach the target.
    for (std::size_t l = 0; l < target.size(); ++l) {
      if (acc[l] + suffix_weights[idx][l] < target[l]) return false;
    }
    if (selected.size() < z.size()) {
      selected.push_back(idx);
      if (matchable()) {
        for (std::size_t l = 0; l < target.size(); ++l) acc[l] += cand_weights[idx][l];
        if (dfs(idx + 1, acc)) return true;
        for (std::size_t l = 0; l < target.size(); ++l) acc[l] -= cand_weights[idx][l];
      }
      selected.pop_back();
    }
    return dfs(idx + 1, acc);
  }
};

}  // namespace

std::optional<PartitionWitness> find_witness(const ColorfulSpace& space,
                                             const Partition& partition, long long radius,
                                             const std::vector<std::size_t>& z) {
  std::vector<long long> target = coverage(space, z, radius);
  bool trivial = true;
  for (long long t : target) trivial = trivial && t <= 0;
  if (trivial) return PartitionWitness{};

  std::vector<std::size_t> candidates;
  std::vector<std::vector<std::size_t>> cand_edges;
  std::vector<std::vector<long long>> cand_weights;
  for (std::size_t p = 0; p < partition.size(); ++p) {
    std::vector<std::size_t> edges;
    for (std::size_t j = 0; j < z.size(); ++j) {
      long long d = part_facility_dist(space, partition.parts[p], z[j]);
      if (d >= 0 && d <= radius) edges.push_back(j);
    }
    if (edges.empty()) continue;
    candidates.push_back(p);
    cand_edges.push_back(std::move(edges));
    cand_weights.push_back(part_weights(space, partition.parts[p]));
  }

  // Greedy over the transversal structure: add candidates in the given order
  // whenever the matching can still saturate the selection. Matchable
  // subfamilies form a matroid, so for a single color the descending-weight
  // order is exact: it reaches the target iff any matchable subfamily does.
  auto greedy = [&](const std::vector<std::size_t>& order) -> std::optional<PartitionWitness> {
    BipartiteMatcher matcher(candidates.size(), z.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      for (std::size_t j : cand_edges[i]) matcher.add_edge(i, j);
    }
    std::vector<std::size_t> selected;
    std::vector<long long> got(space.gamma, 0);
    auto dominates = [&]() {
      for (int l = 0; l < space.gamma; ++l) {
        if (got[l] < target[l]) return false;
      }
      return true;
    };
    for (std::size_t pos : order) {
      if (dominates()) break;
      bool useful = false;
      for (int l = 0; l < space.gamma; ++l) useful = useful || cand_weights[pos][l] > 0;
      if (!useful) continue;
      if (!matcher.augment_from(pos)) continue;
      selected.push_back(pos);
      for (int l = 0; l < space.gamma; ++l) got[l] += cand_weights[pos][l];
    }
    if (!dominates()) return std::nullopt;
    PartitionWitness witness;
    for (std::size_t pos : selected) {
      witness.selected_parts.push_back(candidates[pos]);
      witness.assigned_facility.push_back(z[matcher.matched_right(pos)]);
    }
    return witness;
  };

  // One greedy pass per color (descending weight in that color), plus one by
  // total weight. Exact when there is a single color; a fast certificate
  // otherwise.
  for (int l = 0; l <= space.gamma; ++l) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < candidates.size(); ++i) order.push_back(i);
    auto key = [&](std::size_t i) {
      if (l < space.gamma) return cand_weights[i][l];
      long long total = 0;
      for (long long w : cand_weights[i]) total += w;
      return total;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) > key(b); });
    auto witness = greedy(order);
    if (witness.has_value()) return witness;
    if (space.gamma == 1) return std::nullopt;  // the greedy pass is exact
  }

  std::vector<std::vector<long long>> suffix(candidates.size() + 1,
                                             std::vector<long long>(space.gamma, 0));
  for (std::size_t i = candidates.size(); i-- > 0;) {
    for (int l = 0; l < space.gamma; ++l) suffix[i][l] = suffix[i + 1][l] + cand_weights[i][l];
  }

  WitnessSearch search{space, z, candidates, cand_edges, cand_weights, suffix, target, {}};
  std::vector<long long> acc(space.gamma, 0);
  if (!search.dfs(0, acc)) return std::nullopt;

  PartitionWitness witness;
  BipartiteMatcher matcher(search.selected.size(), z.size());
  for (std::size_t i = 0; i < search.selected.size(); ++i) {
    for (std::size_t j : cand_edges[search.selected[i]]) matcher.add_edge(i, j);
  }
  std::size_t matched = matcher.solve();
  assert(matched == search.selected.size());
  (void)matched;
  for (std::size_t i = 0; i < search.selected.size(); ++i) {
    witness.selected_parts.push_back(candidates[search.selected[i]]);
    witness.assigned_facility.push_back(z[matcher.matched_right(i)]);
  }
  return witness;
}

PartitionReport verify_partition(const ColorfulSpace& space, const Partition& partition,
                                 long long radius, const VerifyOptions& options) {
  PartitionReport report;

  std::vector<int> owner(space.num_clients(), -1);
  for (std::size_t p = 0; p < partition.size(); ++p) {
    for (std::size_t c : partition.parts[p]) {
      if (c >= space.num_clients() || owner[c] >= 0) {
        report.violations.push_back(
            {"disjoint_cover", "client " + std::to_string(c) + " appears twice or is invalid"});
      } else {
        owner[c] = static_cast<int>(p);
      }
    }
  }
  for (std::size_t c = 0; c < space.num_clients(); ++c) {
    if (owner[c] < 0) {
      report.violations.push_back({"disjoint_cover", "client " + std::to_string(c) + " missing"});
    }
  }

  for (std::size_t p = 0; p < partition.size(); ++p) {
    const auto& part = partition.parts[p];
    long long diam = 0;
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) {
        diam = std::max(diam, space.client_client_dist(part[i], part[j]));
      }
    }
    if (diam > partition.factor * radius) {
      report.violations.push_back({"diameter", "part " + std::to_string(p) + " has diameter " +
                                                   std::to_string(diam) + " > " +
                                                   std::to_string(partition.factor * radius)});
    }
  }

  auto check_z = [&](const std::vector<std::size_t>& z, std::uint64_t mask) {
    if (find_witness(space, partition, radius, z).has_value()) {
      ++report.witnesses_found;
    } else {
      report.violations.push_back({"witness", "no witness for facility set mask " +
                                                  std::to_string(mask)});
    }
  };

  if (options.mode == VerifyMode::ExhaustiveZ) {
    if (space.num_facilities() > 20)
      throw SizeLimitExceeded("exhaustive verification supports at most 20 facilities");
    std::uint64_t limit = 1ULL << space.num_facilities();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      std::vector<std::size_t> z;
      for (std::size_t f = 0; f < space.num_facilities(); ++f) {
        if (mask & (1ULL << f)) z.push_back(f);
      }
      check_z(z, mask);
    }
  } else if (options.mode == VerifyMode::SampledZ) {
    if (space.num_facilities() > 63)
      throw SizeLimitExceeded("sampled verification supports at most 63 facilities");
    Rng rng(options.seed);
    for (std::size_t i = 0; i < options.sample_count; ++i) {
      std::uint64_t mask =
          space.num_facilities() == 0 ? 0 : rng.below(1ULL << space.num_facilities());
      std::vector<std::size_t> z;
      for (std::size_t f = 0; f < space.num_facilities(); ++f) {
        if (mask & (1ULL << f)) z.push_back(f);
      }
      check_z(z, mask);
    }
  }

  report.ok = report.violations.empty();
  return report;
}

}  // namespace chroma

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

#ifndef CHROMA_MATCHING_HPP
#define CHROMA_MATCHING_HPP

#include <cstddef>
#include <vector>

namespace chroma {

// Maximum bipartite matching by augmenting paths (Kuhn). Left vertices carry
// adjacency lists of right vertices. Deterministic: left vertices are
// processed in index order and adjacency order decides ties.
class BipartiteMatcher {
 public:
  BipartiteMatcher(std::size_t num_left, std::size_t num_right)
      : adj_(num_left), match_left_(num_left, kUnmatched), match_right_(num_right, kUnmatched) {}

  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

  void add_edge(std::size_t left, std::size_t right) { adj_[left].push_back(right); }

  /// Tries to match (or rematch) the given left vertex; true on success.
  bool augment_from(std::size_t left) {
    std::vector<char> visited(match_right_.size(), 0);
    return try_kuhn(left, visited);
  }

  std::size_t solve() {
    std::size_t matched = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kUnmatched && augment_from(u)) ++matched;
    }
    return matched;
  }

  std::size_t matched_right(std::size_t left) const { return match_left_[left]; }
  const std::vector<std::size_t>& left_matches() const { return match_left_; }

 private:
  bool try_kuhn(std::size_t u, std::vector<char>& visited) {
    for (std::size_t v : adj_[u]) {
      if (visited[v]) continue;
      visited[v] = 1;
      if (match_right_[v] == kUnmatched || try_kuhn(match_right_[v], visited)) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
};

/// True when every left vertex of `adjacency` can be matched to a distinct
/// right vertex (a system of distinct representatives exists).
bool saturating_matching_exists(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::size_t num_right);

}  // namespace chroma

#endif  // CHROMA_MATCHING_HPP

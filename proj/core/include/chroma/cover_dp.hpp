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

#ifndef CHROMA_COVER_DP_HPP
#define CHROMA_COVER_DP_HPP

#include <optional>
#include <utility>
#include <vector>

namespace chroma {

struct CoverDpResult {
  long long cost = 0;
  std::vector<std::size_t> chosen;  // element indices, ascending
};

/// min sum cost(u) z(u) s.t. sum weights[l][u] z(u) >= targets[l] for every l,
/// z binary. Dynamic program over requirement vectors capped at the targets
/// (product of (target_l + 1) states). Elements are processed in index order
/// and skipping wins cost ties, so the chosen set is deterministic. Elements
/// with negative cost are not supported; an element with cost kUnusable is
/// never selected. Returns nullopt when the targets are unreachable.
inline constexpr long long kUnusable = (1LL << 60);

std::optional<CoverDpResult> min_cost_cover(const std::vector<std::vector<long long>>& weights,
                                            const std::vector<long long>& costs,
                                            const std::vector<long long>& targets);

}  // namespace chroma

#endif  // CHROMA_COVER_DP_HPP

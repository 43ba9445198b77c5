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

#ifndef CHROMA_RNG_HPP
#define CHROMA_RNG_HPP

#include <cstdint>

namespace chroma {

// SplitMix64. All randomized code goes through this generator so results are
// reproducible across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling to avoid modulo bias.
    std::uint64_t threshold = (0ULL - n) % n;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  /// Uniform value in [lo, hi], inclusive.
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1ULL) != 0; }

  /// Deterministically derives an independent stream for sub-tasks.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
    Rng r(seed ^ (0x5851f42d4c957f2dULL * (salt + 1)));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace chroma

#endif  // CHROMA_RNG_HPP

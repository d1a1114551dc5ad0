// Copyright 2026 The gsf developers
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

#pragma once

#include <cstdint>
#include <stdexcept>

#include "gsf/graph.hpp"

namespace gsf {

// Small splitmix64-based generator. Unlike std:: distributions its output is
// identical across platforms, which the seeded benchmark CSV relies on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool bernoulli(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("Rng::bernoulli: p in [0,1]");
    constexpr double two53 = 9007199254740992.0;  // 2^53
    auto threshold = std::uint64_t(p * two53);
    return (next() >> 11) < threshold;
  }

  bool coin() { return next() & 1; }

 private:
  std::uint64_t state_;
};

// Erdos-Renyi G(n, p), rejection-sampled until connected. Deterministic in
// (seed, n, p).
inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: n >= 1");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(splitmix64(seed ^ splitmix64(attempt * 0x51ed270b0a1ULL + n)));
    Graph g(n);
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng.bernoulli(p)) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

}  // namespace gsf

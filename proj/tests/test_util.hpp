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

#include <complex>
#include <functional>
#include <vector>

#include "gsf/graph.hpp"
#include "gsf/random.hpp"
#include "gsf/tableau.hpp"

namespace gsf::test {

inline Graph random_graph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(std::uint64_t(i) + 1)]);
  return p;
}

// Enumerates every labeled graph of order n (2^(n(n-1)/2) of them).
inline void for_each_graph(int n, const std::function<void(const Graph&)>& f) {
  int m = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v, ++bit)
        if ((mask >> bit) & 1) g.add_edge(u, v);
    f(g);
  }
}

inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& f) {
  for_each_graph(n, [&](const Graph& g) {
    if (is_connected(g)) f(g);
  });
}

// GF(2) rank of the cut block adj[1..x][x+1..n]: the bipartite entanglement
// entropy of the graph state across that cut. Independent of the tableau
// machinery.
inline int cut_rank(const Graph& g, int x) {
  int n = g.order();
  std::vector<std::vector<int>> rows;
  for (int a = 0; a < x; ++a) {
    std::vector<int> r;
    for (int b = x; b < n; ++b) r.push_back(g.row0(a).get(b) ? 1 : 0);
    rows.push_back(std::move(r));
  }
  int rank = 0;
  int cols = n - x;
  for (int c = 0; c < cols && rank < int(rows.size()); ++c) {
    int p = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (rows[r][c]) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    for (int r = 0; r < int(rows.size()); ++r)
      if (r != rank && rows[r][c])
        for (int cc = 0; cc < cols; ++cc) rows[r][cc] ^= rows[rank][cc];
    ++rank;
  }
  return rank;
}

// Dense symbolic Pauli string with an overall phase i^k; an independent check
// for the tableau rowsum.
struct DensePauli {
  std::vector<char> letters;  // 'I', 'X', 'Y', 'Z'
  int iphase = 0;             // power of i mod 4

  static DensePauli from_row(const Tableau& t, int r) {
    DensePauli p;
    p.letters.resize(t.num_qubits());
    for (int q = 1; q <= t.num_qubits(); ++q) p.letters[q - 1] = t.pauli_at(r, q);
    p.iphase = t.row(r).neg ? 2 : 0;
    return p;
  }

  DensePauli multiply(const DensePauli& o) const {
    // single-qubit products: result letter and i-power of a*b
    auto mul = [](char a, char b) -> std::pair<char, int> {
      if (a == 'I') return {b, 0};
      if (b == 'I') return {a, 0};
      if (a == b) return {'I', 0};
      if (a == 'X') return b == 'Y' ? std::pair<char, int>{'Z', 1} : std::pair<char, int>{'Y', 3};
      if (a == 'Y') return b == 'Z' ? std::pair<char, int>{'X', 1} : std::pair<char, int>{'Z', 3};
      return b == 'X' ? std::pair<char, int>{'Y', 1} : std::pair<char, int>{'X', 3};
    };
    DensePauli out;
    out.iphase = (iphase + o.iphase) % 4;
    out.letters.resize(letters.size());
    for (std::size_t q = 0; q < letters.size(); ++q) {
      auto [l, ph] = mul(letters[q], o.letters[q]);
      out.letters[q] = l;
      out.iphase = (out.iphase + ph) % 4;
    }
    return out;
  }
};

}  // namespace gsf::test

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

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsf/bitvec.hpp"

namespace gsf {

// Simple undirected graph stored as a symmetric bit-matrix over GF(2).
// Vertices are 1-based in the public interface and 0-based in storage.
class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
    adj_.assign(n, BitVec(n));
  }

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int order() const { return n_; }

  void check_vertex(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("Graph: vertex out of range");
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u - 1].get(v - 1);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: no self-loops");
    adj_[u - 1].set(v - 1);
    adj_[v - 1].set(u - 1);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u - 1].reset(v - 1);
    adj_[v - 1].reset(u - 1);
  }

  void toggle_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: no self-loops");
    adj_[u - 1].flip(v - 1);
    adj_[v - 1].flip(u - 1);
  }

  int degree(int v) const {
    check_vertex(v);
    return adj_[v - 1].popcount();
  }

  // Neighborhood row of vertex v (bit i set <=> edge (v, i+1)).
  const BitVec& row(int v) const {
    check_vertex(v);
    return adj_[v - 1];
  }
  // 0-based row access for inner loops.
  const BitVec& row0(int i) const { return adj_[i]; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    row(v).for_each_set([&](int i) { out.push_back(i + 1); });
    return out;
  }

  int edge_count() const {
    int s = 0;
    for (const auto& r : adj_) s += r.popcount();
    return s / 2;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      adj_[u].for_each_set([&](int v) {
        if (v > u) out.emplace_back(u + 1, v + 1);
      });
    return out;
  }

  // Induced subgraph on `keep` (1-based labels, ascending relabel).
  Graph induced(const std::vector<int>& keep) const {
    Graph g(int(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b)
        if (has_edge(keep[a], keep[b])) g.add_edge(int(a) + 1, int(b) + 1);
    return g;
  }

  // Relabel: vertex v of the result is vertex perm[v-1] of this graph.
  Graph permuted(const std::vector<int>& perm) const {
    if (int(perm.size()) != n_) throw std::invalid_argument("permuted: bad permutation size");
    Graph g(n_);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (has_edge(perm[a], perm[b])) g.add_edge(a + 1, b + 1);
    return g;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  std::uint64_t hash(std::uint64_t seed = 0x6773665f67726168ULL) const {
    std::uint64_t h = splitmix64(seed ^ std::uint64_t(n_));
    for (const auto& r : adj_) h = hash_words(h, r.words());
    return h;
  }

 private:
  int n_;
  std::vector<BitVec> adj_;
};

// Subset of the vertices 1..n of some graph.
struct VertexSet {
  BitVec bits;

  VertexSet() = default;
  explicit VertexSet(int n) : bits(n) {}

  bool contains(int v) const { return bits.get(v - 1); }
  void insert(int v) { bits.set(v - 1); }
  void erase(int v) { bits.reset(v - 1); }
  int count() const { return bits.popcount(); }
  bool empty() const { return bits.none(); }

  std::vector<int> members() const {
    std::vector<int> out;
    bits.for_each_set([&](int i) { out.push_back(i + 1); });
    return out;
  }

  bool operator==(const VertexSet& o) const { return bits == o.bits; }
};

// Toggles every edge inside the neighborhood of v; everything else unchanged.
inline Graph local_complement(const Graph& g, int v) {
  g.check_vertex(v);
  Graph out = g;
  std::vector<int> nb = g.neighbors(v);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b) out.toggle_edge(nb[a], nb[b]);
  return out;
}

// Edge pivot g*v*w*v along the edge (v, w).
inline Graph pivot(const Graph& g, int v, int w) {
  if (!g.has_edge(v, w)) throw std::invalid_argument("pivot: (v,w) is not an edge");
  return local_complement(local_complement(local_complement(g, v), w), v);
}

enum class MinorKind { Z, Y, X };

struct VertexMinorResult {
  Graph graph;
  // old_to_new[old_label] = new label, or 0 for the deleted vertex.
  // Index 0 is unused.
  std::vector<int> old_to_new;
};

// Subgraph after a Z/Y/X(w) vertex removal, with compacted labels.
inline VertexMinorResult vertex_minor(const Graph& g, int v, MinorKind kind, int w = 0) {
  g.check_vertex(v);
  if (g.order() < 2) throw std::invalid_argument("vertex_minor: graph too small");
  Graph base(1);
  switch (kind) {
    case MinorKind::Z:
      base = g;
      break;
    case MinorKind::Y:
      base = local_complement(g, v);
      break;
    case MinorKind::X:
      if (w == 0 || !g.has_edge(v, w))
        throw std::invalid_argument("vertex_minor: X(w) requires w in N(v)");
      base = pivot(g, v, w);
      break;
  }
  std::vector<int> keep;
  std::vector<int> old_to_new(g.order() + 1, 0);
  for (int u = 1; u <= g.order(); ++u)
    if (u != v) {
      keep.push_back(u);
      old_to_new[u] = int(keep.size());
    }
  return VertexMinorResult{base.induced(keep), std::move(old_to_new)};
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> comps;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp(n);
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.bits.set(u);
      g.row0(u).for_each_set([&](int w) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      });
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

namespace detail {

// Per-vertex invariant: (degree, sorted multiset of neighbor degrees).
inline std::vector<std::pair<int, std::vector<int>>> iso_invariants(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, std::vector<int>>> inv(n);
  for (int v = 0; v < n; ++v) {
    inv[v].first = g.row0(v).popcount();
    g.row0(v).for_each_set([&](int w) { inv[v].second.push_back(g.row0(w).popcount()); });
    std::sort(inv[v].second.begin(), inv[v].second.end());
  }
  return inv;
}

inline bool iso_backtrack(const Graph& g1, const Graph& g2, std::vector<int>& map12,
                          std::vector<bool>& used, int v,
                          const std::vector<std::pair<int, std::vector<int>>>& inv1,
                          const std::vector<std::pair<int, std::vector<int>>>& inv2) {
  int n = g1.order();
  if (v == n) return true;
  for (int u = 0; u < n; ++u) {
    if (used[u] || inv1[v] != inv2[u]) continue;
    bool ok = true;
    for (int p = 0; p < v && ok; ++p)
      if (g1.row0(v).get(p) != g2.row0(u).get(map12[p])) ok = false;
    if (!ok) continue;
    map12[v] = u;
    used[u] = true;
    if (iso_backtrack(g1, g2, map12, used, v + 1, inv1, inv2)) return true;
    used[u] = false;
  }
  return false;
}

}  // namespace detail

// Exact isomorphism test by backtracking; intended for small orders (n <= 16).
inline bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order()) return false;
  if (g1.edge_count() != g2.edge_count()) return false;
  auto inv1 = detail::iso_invariants(g1);
  auto inv2 = detail::iso_invariants(g2);
  auto s1 = inv1, s2 = inv2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return false;
  std::vector<int> map12(g1.order(), -1);
  std::vector<bool> used(g1.order(), false);
  return detail::iso_backtrack(g1, g2, map12, used, 0, inv1, inv2);
}

}  // namespace gsf

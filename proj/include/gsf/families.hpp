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

#include <stdexcept>
#include <string>

#include "gsf/graph.hpp"

namespace gsf {

inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: n >= 1");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: n >= 3");
  Graph g = make_path(n);
  g.add_edge(n, 1);
  return g;
}

inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("make_complete: n >= 1");
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

// Star on n vertices: center 1, leaves 2..n.
inline Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("make_star: n >= 1");
  Graph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

// Repeater graph: complete core 1..n, leaf n+i attached to core i.
inline Graph make_rgs(int n) {
  if (n < 2) throw std::invalid_argument("make_rgs: n >= 2");
  Graph g(2 * n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    g.add_edge(u, n + u);
  }
  return g;
}

// Repeater graph with l leaves per core. Cores 1..n, leaves of core i are
// n + (i-1)l + 1 .. n + il.
inline Graph make_rgs_many_leaves(int n, int l) {
  if (n < 2 || l < 1) throw std::invalid_argument("make_rgs_many_leaves: n >= 2, l >= 1");
  Graph g(n + n * l);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    for (int k = 1; k <= l; ++k) g.add_edge(u, n + (u - 1) * l + k);
  }
  return g;
}

// Wheel with `rim` outer vertices 1..rim and hub rim+1.
inline Graph make_wheel(int rim) {
  if (rim < 3) throw std::invalid_argument("make_wheel: rim >= 3");
  Graph g(rim + 1);
  for (int v = 1; v < rim; ++v) g.add_edge(v, v + 1);
  g.add_edge(rim, 1);
  for (int v = 1; v <= rim; ++v) g.add_edge(v, rim + 1);
  return g;
}

// Triangle rim 1,2,3 with each spoke to the hub 7 subdivided once (4,5,6).
inline Graph make_bw3() {
  Graph g(7);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(1, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  g.add_edge(3, 6);
  g.add_edge(4, 7);
  g.add_edge(5, 7);
  g.add_edge(6, 7);
  return g;
}

// Repeater graph relabeled so that vertex labels follow an emission ordering
// needing two emitters: leaf_j -> 2j-1, core_j -> 2j, then the labels of the
// second-to-last core and the last leaf are exchanged.
inline Graph rgs_ordering(int n) {
  if (n < 3) throw std::invalid_argument("rgs_ordering: n >= 3");
  Graph g(2 * n);
  std::vector<int> core(n + 1), leaf(n + 1);
  for (int j = 1; j <= n; ++j) {
    leaf[j] = 2 * j - 1;
    core[j] = 2 * j;
  }
  std::swap(core[n - 1], leaf[n]);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(core[u], core[v]);
    g.add_edge(core[u], leaf[u]);
  }
  return g;
}

// Multi-leaf repeater graph with a two-emitter emission ordering: leaves of a
// core precede it, and every core except the first swaps labels with its
// first leaf.
inline Graph rgs_many_leaves_ordering(int n, int l) {
  if (n < 3 || l < 1) throw std::invalid_argument("rgs_many_leaves_ordering: n >= 3, l >= 1");
  Graph g(n + n * l);
  std::vector<int> core(n + 1);
  std::vector<std::vector<int>> leaves(n + 1);
  for (int j = 1; j <= n; ++j) {
    int base = (j - 1) * (l + 1);
    for (int k = 1; k <= l; ++k) leaves[j].push_back(base + k);
    core[j] = base + l + 1;
  }
  for (int j = 2; j <= n; ++j) std::swap(core[j], leaves[j][0]);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(core[u], core[v]);
    for (int lf : leaves[u]) g.add_edge(core[u], lf);
  }
  return g;
}

// Encoded repeater graph (tree gadgets with branching (2, l)) labeled with a
// two-emitter emission ordering. Each gadget holds two cores with l leaves
// each plus a top node joined to both cores. Labels follow the construction
// order (a core, then its leaves); in gadgets after the first the second
// core and the top node exchange labels. The first gadget stores both cores,
// later gadgets their first core and top node; the stored set is fully
// connected.
inline Graph rgs_encoded_ordering(int n, int l) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("rgs_encoded_ordering: n even, n >= 4");
  if (l < 1) throw std::invalid_argument("rgs_encoded_ordering: l >= 1");
  int gadgets = n / 2;
  int block = 2 * (l + 1) + 1;
  Graph g(gadgets * block);
  std::vector<int> stored;
  for (int t = 1; t <= gadgets; ++t) {
    int base = (t - 1) * block;
    int core1 = base + 1;
    std::vector<int> leaves1, leaves2;
    for (int k = 1; k <= l; ++k) leaves1.push_back(base + 1 + k);
    int core2 = base + l + 2;
    for (int k = 1; k <= l; ++k) leaves2.push_back(base + l + 2 + k);
    int top = base + 2 * l + 3;
    if (t >= 2) std::swap(core2, top);
    for (int lf : leaves1) g.add_edge(core1, lf);
    for (int lf : leaves2) g.add_edge(core2, lf);
    g.add_edge(top, core1);
    g.add_edge(top, core2);
    if (t == 1) {
      stored.push_back(core1);
      stored.push_back(core2);
    } else {
      stored.push_back(core1);
      stored.push_back(top);
    }
  }
  for (std::size_t a = 0; a < stored.size(); ++a)
    for (std::size_t b = a + 1; b < stored.size(); ++b)
      if (!g.has_edge(stored[a], stored[b])) g.add_edge(stored[a], stored[b]);
  return g;
}

enum class FamilyKind { Path, Cycle, Complete, Star, Rgs, RgsManyLeaves, Wheel5, Wheel7, Bw3 };

inline Graph make_family(FamilyKind kind, int n = 0, int l = 1) {
  switch (kind) {
    case FamilyKind::Path: return make_path(n);
    case FamilyKind::Cycle: return make_cycle(n);
    case FamilyKind::Complete: return make_complete(n);
    case FamilyKind::Star: return make_star(n);
    case FamilyKind::Rgs: return make_rgs(n);
    case FamilyKind::RgsManyLeaves: return make_rgs_many_leaves(n, l);
    case FamilyKind::Wheel5: return make_wheel(5);
    case FamilyKind::Wheel7: return make_wheel(7);
    case FamilyKind::Bw3: return make_bw3();
  }
  throw std::invalid_argument("make_family: unknown kind");
}

}  // namespace gsf

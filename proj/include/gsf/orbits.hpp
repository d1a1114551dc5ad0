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

#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "gsf/families.hpp"
#include "gsf/graph.hpp"

namespace gsf {

using BigInt = boost::multiprecision::cpp_int;

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

struct GraphKey {
  std::vector<std::uint64_t> words;
  bool operator==(const GraphKey& o) const { return words == o.words; }
};

struct GraphKeyHash {
  std::size_t operator()(const GraphKey& k) const { return hash_words(0x6b6579, k.words); }
};

inline GraphKey graph_key(const Graph& g) {
  GraphKey k;
  for (int v = 0; v < g.order(); ++v)
    for (auto w : g.row0(v).words()) k.words.push_back(w);
  return k;
}

// Vertices worth complementing about: LC at degree <= 1 is the identity.
inline std::vector<int> lc_candidates(const Graph& g) {
  std::vector<int> out;
  for (int v = 1; v <= g.order(); ++v)
    if (g.degree(v) >= 2) out.push_back(v);
  return out;
}

}  // namespace detail

// Breadth-first LC orbit of g. With keep_isomorphs the members are distinct
// labeled graphs; otherwise graphs isomorphic to an earlier member are
// dropped. Throws BudgetExceeded past max_members.
inline std::vector<Graph> map_out_orbit(const Graph& g, bool keep_isomorphs,
                                        std::size_t max_members = 1u << 22) {
  std::vector<Graph> members{g};
  std::unordered_set<detail::GraphKey, detail::GraphKeyHash> seen{detail::graph_key(g)};
  std::size_t level_begin = 0;
  while (level_begin < members.size()) {
    std::size_t level_end = members.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      Graph base = members[i];
      for (int v : detail::lc_candidates(base)) {
        Graph next = local_complement(base, v);
        if (seen.count(detail::graph_key(next))) continue;
        if (!keep_isomorphs) {
          bool iso = false;
          for (const auto& m : members)
            if (is_isomorphic(m, next)) {
              iso = true;
              break;
            }
          if (iso) {
            // Remember the labeled graph so it is not re-tested later.
            seen.insert(detail::graph_key(next));
            continue;
          }
        }
        seen.insert(detail::graph_key(next));
        members.push_back(std::move(next));
        if (members.size() > max_members) throw BudgetExceeded("map_out_orbit: orbit too large");
      }
    }
    level_begin = level_end;
  }
  return members;
}

// True iff g2 appears (as a labeled graph) in g1's LC orbit within the given
// member budget. Throws BudgetExceeded when the search is inconclusive.
inline bool lc_equivalent(const Graph& g1, const Graph& g2, std::size_t budget = 1u << 20) {
  if (g1.order() != g2.order()) throw std::invalid_argument("lc_equivalent: order mismatch");
  if (g1 == g2) return true;
  std::vector<Graph> frontier{g1};
  std::unordered_set<detail::GraphKey, detail::GraphKeyHash> seen{detail::graph_key(g1)};
  while (!frontier.empty()) {
    std::vector<Graph> next_level;
    for (const Graph& base : frontier)
      for (int v : detail::lc_candidates(base)) {
        Graph next = local_complement(base, v);
        if (next == g2) return true;
        auto key = detail::graph_key(next);
        if (seen.count(key)) continue;
        seen.insert(std::move(key));
        next_level.push_back(std::move(next));
        if (seen.size() > budget) throw BudgetExceeded("lc_equivalent: budget exceeded");
      }
    frontier = std::move(next_level);
  }
  return false;
}

inline long long rgs_noniso_orbit_size(int n) {
  return (3 * (2LL * n + 1) - (((n + 1) % 2 == 0) ? 1 : -1)) / 4;
}

// Checks that consecutive members differ by a single local complementation
// (the vertex is searched for, not trusted) and that the chain starts at
// `base`; by transitivity every member is then LC-equivalent to the base.
inline bool lc_chain_certificate(const Graph& base, const std::vector<Graph>& members) {
  if (members.empty() || members.front() != base) return false;
  for (std::size_t k = 1; k < members.size(); ++k) {
    bool found = false;
    for (int v = 1; v <= base.order() && !found; ++v)
      if (local_complement(members[k - 1], v) == members[k]) found = true;
    if (!found) return false;
  }
  return true;
}

// Consecutive-LC vertex sequence generating the non-isomorphic repeater
// orbit: core pairs interleaved with the leaf of each pair's first core, in
// canonical make_rgs labels. After dropping repeated vertices the sequence
// ends at a core for odd n; for even n the trailing leaf is removed.
inline std::vector<int> rgs_orbit_lc_sequence(int n) {
  if (n < 3) throw std::invalid_argument("rgs_orbit_lc_sequence: n >= 3");
  long long target = rgs_noniso_orbit_size(n);
  std::vector<int> raw{1, 2};
  int a = 1, b = 2;
  while (int(raw.size()) < target - 1) {
    int w = n + a;
    a += 2;
    b += 2;
    raw.push_back(w);
    raw.push_back(a);
    raw.push_back(b);
  }
  std::vector<int> out;
  std::unordered_set<int> used;
  for (int v : raw)
    if (used.insert(v).second) out.push_back(v);
  if (n % 2 == 0) out.pop_back();
  return out;
}

// Non-isomorphic LC orbit of the repeater graph, generated by the explicit
// LC sequence rather than a full orbit search. `ordering`, when given,
// relabels every member (vertex v of the output is ordering[v-1] of the
// canonical labels).
inline std::vector<Graph> map_out_rgs_orbit(int n, const std::vector<int>& ordering = {}) {
  if (n < 3) throw std::invalid_argument("map_out_rgs_orbit: n >= 3");
  Graph b = make_rgs(n);
  std::vector<Graph> members{b};
  for (int v : rgs_orbit_lc_sequence(n)) {
    b = local_complement(b, v);
    members.push_back(b);
  }
  if (!ordering.empty())
    for (auto& m : members) m = m.permuted(ordering);
  return members;
}

// Same pattern for repeater graphs with l leaves per core; the orbit size is
// independent of l. Members are in rgs_many_leaves_ordering labels.
inline std::vector<Graph> map_out_rgs_orbit_many_leaves(int n, int l) {
  if (n < 3 || l < 1) throw std::invalid_argument("map_out_rgs_orbit_many_leaves: n >= 3, l >= 1");
  Graph g = rgs_many_leaves_ordering(n, l);
  // Core and first-leaf labels in the ordered labeling: cores after the swap
  // sit at (j-1)(l+1)+1 for j >= 2 and l+1 for j = 1; the pattern below only
  // needs "core j" and "some leaf of core j".
  std::vector<int> core(n + 1), leaf(n + 1);
  core[1] = l + 1;
  leaf[1] = 1;
  for (int j = 2; j <= n; ++j) {
    core[j] = (j - 1) * (l + 1) + 1;
    leaf[j] = j * (l + 1);
  }
  std::vector<Graph> members{g};
  Graph b = g;
  for (int idx : rgs_orbit_lc_sequence(n)) {
    int v = idx <= n ? core[idx] : leaf[idx - n];
    b = local_complement(b, v);
    members.push_back(b);
  }
  return members;
}

namespace detail {

// Memo bucket for the Euler index: WL-style invariant hash, confirmed by an
// exact isomorphism test before a value is reused.
struct EulerMemo {
  std::unordered_map<std::uint64_t, std::vector<std::pair<Graph, BigInt>>> buckets;
  std::size_t nodes = 0;
  std::size_t node_budget = 0;

  static std::uint64_t invariant(const Graph& g) {
    int n = g.order();
    std::vector<std::uint64_t> color(n);
    for (int v = 0; v < n; ++v) color[v] = splitmix64(0xc0 + g.row0(v).popcount());
    for (int round = 0; round < 3; ++round) {
      std::vector<std::uint64_t> next(n);
      for (int v = 0; v < n; ++v) {
        std::vector<std::uint64_t> nb;
        g.row0(v).for_each_set([&](int w) { nb.push_back(color[w]); });
        std::sort(nb.begin(), nb.end());
        std::uint64_t h = splitmix64(color[v]);
        for (auto c : nb) h = splitmix64(h ^ c);
        next[v] = h;
      }
      color = std::move(next);
    }
    std::sort(color.begin(), color.end());
    std::uint64_t h = splitmix64(0x65756c6572ULL ^ std::uint64_t(n));
    for (auto c : color) h = splitmix64(h ^ c);
    return h;
  }

  BigInt* find(const Graph& g, std::uint64_t inv) {
    auto it = buckets.find(inv);
    if (it == buckets.end()) return nullptr;
    for (auto& [cand, val] : it->second)
      if (cand.order() == g.order() && is_isomorphic(cand, g)) return &val;
    return nullptr;
  }

  void store(const Graph& g, std::uint64_t inv, BigInt val) {
    buckets[inv].emplace_back(g, std::move(val));
  }
};

inline BigInt euler_index_rec(const Graph& g, EulerMemo& memo) {
  if (memo.node_budget && ++memo.nodes > memo.node_budget)
    throw BudgetExceeded("euler_index_e: recursion budget exceeded");
  int n = g.order();
  if (n == 1) return 2;

  // Strip isolated vertices in one pass: each contributes a factor 2.
  std::vector<int> keep;
  for (int v = 1; v <= n; ++v)
    if (g.degree(v) > 0) keep.push_back(v);
  int isolated = n - int(keep.size());
  if (isolated > 0) {
    BigInt factor = BigInt(1) << isolated;
    if (keep.empty()) return factor;  // edgeless: 2^(n-1) * e(single vertex)
    if (keep.size() == 1) return factor * 2;
    return factor * euler_index_rec(g.induced(keep), memo);
  }

  std::uint64_t inv = EulerMemo::invariant(g);
  if (BigInt* hit = memo.find(g, inv)) return *hit;

  // Lowest-index vertex with its lowest neighbor.
  int v = 1;
  int w = g.neighbors(v).front();
  BigInt total = euler_index_rec(vertex_minor(g, v, MinorKind::Z).graph, memo) +
                 euler_index_rec(vertex_minor(g, v, MinorKind::Y).graph, memo) +
                 euler_index_rec(vertex_minor(g, v, MinorKind::X, w).graph, memo);
  memo.store(g, inv, total);
  return total;
}

}  // namespace detail

// Euler index e(G): e = 2 on a single vertex, doubling for isolated
// vertices, otherwise the sum over the three vertex minors.
inline BigInt euler_index_e(const Graph& g, std::size_t node_budget = 0) {
  detail::EulerMemo memo;
  memo.node_budget = node_budget;
  return detail::euler_index_rec(g, memo);
}

// Edge-neighbor function nu_G(x,y) = N(x) & N(y) as a bit vector.
inline BitVec edge_neighbor_vector(const Graph& g, int x, int y) {
  BitVec v = g.row(x);
  v.and_with(g.row(y));
  return v;
}

// nu_G applied to a fundamental cycle basis (spanning-tree chords).
inline std::vector<std::pair<std::vector<std::pair<int, int>>, BitVec>> cycle_space_vectors(
    const Graph& g) {
  int n = g.order();
  std::vector<int> parent(n + 1, 0), depth(n + 1, -1);
  std::vector<std::pair<std::vector<std::pair<int, int>>, BitVec>> out;
  // BFS spanning forest.
  for (int root = 1; root <= n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::deque<int> bfs{root};
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      g.row(u).for_each_set([&](int w0) {
        int w = w0 + 1;
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          bfs.push_back(w);
        }
      });
    }
  }
  for (auto [u, v] : g.edges()) {
    if (parent[u] == v || parent[v] == u) continue;  // tree edge
    // Fundamental cycle: chord (u,v) plus the tree paths to the LCA.
    std::vector<std::pair<int, int>> cyc{{u, v}};
    int a = u, b = v;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        cyc.emplace_back(a, parent[a]);
        a = parent[a];
      } else {
        cyc.emplace_back(b, parent[b]);
        b = parent[b];
      }
    }
    BitVec nu(n);
    for (auto [x, y] : cyc) nu.xor_with(edge_neighbor_vector(g, x, y));
    out.emplace_back(std::move(cyc), std::move(nu));
  }
  return out;
}

// nu_G over the complement edge set.
inline std::vector<BitVec> complement_edge_vectors(const Graph& g) {
  std::vector<BitVec> out;
  int n = g.order();
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!g.has_edge(u, v)) out.push_back(edge_neighbor_vector(g, u, v));
  return out;
}

inline int gf2_rank(std::vector<BitVec> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  int n = rows[0].size();
  for (int c = 0; c < n && rank < int(rows.size()); ++c) {
    int p = -1;
    for (int r = rank; r < int(rows.size()); ++r)
      if (rows[r].get(c)) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[rank], rows[p]);
    for (int r = 0; r < int(rows.size()); ++r)
      if (r != rank && rows[r].get(c)) rows[r].xor_with(rows[rank]);
    ++rank;
  }
  return rank;
}

struct BineighborhoodBasis {
  std::vector<BitVec> vectors;  // spanning set of the bineighborhood space
  int dim = 0;
};

struct BineighborhoodResult {
  BigInt k;
  bool in_mu = false;
  BineighborhoodBasis basis;
};

// k(G) = 2^(n - dim L(G)), plus 2 when G lies in the class mu defined by the
// three parity conditions on degrees, complement-edge bineighborhoods, and
// the cycle basis.
inline BineighborhoodResult bineighborhood_k(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("bineighborhood_k: graph must be connected");
  int n = g.order();
  auto cycles = cycle_space_vectors(g);
  auto comp = complement_edge_vectors(g);

  BineighborhoodResult res;
  for (auto& [cyc, nu] : cycles) res.basis.vectors.push_back(nu);
  for (auto& nu : comp) res.basis.vectors.push_back(nu);
  res.basis.dim = gf2_rank(res.basis.vectors);

  bool in_mu = true;
  for (int v = 1; v <= n && in_mu; ++v)
    if (g.degree(v) % 2 == 0) in_mu = false;
  for (auto& nu : comp)
    if (in_mu && nu.popcount() % 2 != 0) in_mu = false;
  for (auto& [cyc, nu] : cycles)
    if (in_mu && int(cyc.size() % 2) != nu.popcount() % 2) in_mu = false;
  res.in_mu = in_mu;

  res.k = BigInt(1) << (n - res.basis.dim);
  if (in_mu) res.k += 2;
  return res;
}

// Orbit size l(G) = e(G)/k(G); exact for circle graphs. Throws on a
// non-integral ratio.
inline BigInt orbit_size_l(const Graph& g) {
  BigInt e = euler_index_e(g);
  BigInt k = bineighborhood_k(g).k;
  if (e % k != 0) throw std::domain_error("orbit_size_l: e(G) not divisible by k(G) (non-circle input?)");
  return e / k;
}

// Closed forms used as validators.
inline BigInt star_orbit_e_closed_form(int n) { return (BigInt(1) << (n - 1)) * (n + 1); }
inline BigInt rgs_orbit_e_closed_form(int n) {
  BigInt p6 = 1;
  for (int i = 0; i < n - 1; ++i) p6 *= 6;
  return p6 * (3 + 2 * n) + (BigInt(1) << (n - 1));
}
inline BigInt rgs_orbit_l_closed_form(int n) {
  BigInt p3 = 1;
  for (int i = 0; i < n - 1; ++i) p3 *= 3;
  return (1 + p3 * (3 + 2 * n)) / 2;
}

// Partition of the given labeled graphs into LC-equivalence families. Each
// family id is the index of its first representative in the input order.
struct FamilyPartition {
  std::vector<int> family_of;  // per input graph
  int num_families = 0;
};

inline FamilyPartition classify_lc_families(const std::vector<Graph>& graphs,
                                            std::size_t orbit_budget = 1u << 22) {
  FamilyPartition part;
  part.family_of.assign(graphs.size(), -1);
  std::unordered_map<detail::GraphKey, int, detail::GraphKeyHash> index;
  for (std::size_t i = 0; i < graphs.size(); ++i) index[detail::graph_key(graphs[i])] = int(i);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (part.family_of[i] >= 0) continue;
    int fam = part.num_families++;
    for (const Graph& member : map_out_orbit(graphs[i], true, orbit_budget)) {
      auto it = index.find(detail::graph_key(member));
      if (it != index.end()) part.family_of[it->second] = fam;
    }
  }
  return part;
}

}  // namespace gsf

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

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsf/graph.hpp"

namespace gsf {

enum class GateKind { H, P, Pdag, X, Y, Z, CNOT };

// Single-qubit gate on q, or CNOT with control q and target q2. 1-based.
struct Gate {
  GateKind kind;
  int q;
  int q2 = 0;
};

inline Gate inverse_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::P: return Gate{GateKind::Pdag, g.q};
    case GateKind::Pdag: return Gate{GateKind::P, g.q};
    default: return g;
  }
}

// Stabilizer group of an n-qubit state: n generator rows over (X|Z) bits with
// a +/- phase each. Qubits 1..n_photons are photons (in emission-column
// order), the rest are emitters.
class Tableau {
 public:
  struct Row {
    BitVec x, z;
    bool neg = false;
  };

  Tableau() = default;

  static Tableau from_graph(const Graph& g) {
    Tableau t;
    int n = g.order();
    t.n_ = n;
    t.n_photons_ = n;
    t.rows_.assign(n, Row{BitVec(n), BitVec(n), false});
    for (int a = 0; a < n; ++a) {
      t.rows_[a].x.set(a);
      t.rows_[a].z = g.row0(a);
    }
    return t;
  }

  int num_qubits() const { return n_; }
  int num_photons() const { return n_photons_; }
  int num_emitters() const { return n_ - n_photons_; }
  bool is_emitter(int q) const { return q > n_photons_; }

  void set_num_photons(int np) {
    if (np < 0 || np > n_) throw std::invalid_argument("set_num_photons: out of range");
    n_photons_ = np;
  }

  const Row& row(int r) const { return rows_[r]; }
  int num_rows() const { return int(rows_.size()); }

  // Appends k emitter qubits, each in |0> with its own +Z row.
  void add_emitters(int k) {
    int m = n_ + k;
    std::vector<Row> grown;
    grown.reserve(m);
    for (const auto& r : rows_) {
      Row nr{BitVec(m), BitVec(m), r.neg};
      r.x.for_each_set([&](int i) { nr.x.set(i); });
      r.z.for_each_set([&](int i) { nr.z.set(i); });
      grown.push_back(std::move(nr));
    }
    for (int e = n_; e < m; ++e) {
      Row nr{BitVec(m), BitVec(m), false};
      nr.z.set(e);
      grown.push_back(std::move(nr));
    }
    rows_ = std::move(grown);
    n_ = m;
  }

  void check_qubit(int q) const {
    if (q < 1 || q > n_) throw std::out_of_range("Tableau: qubit out of range");
  }

  // Heisenberg conjugation of every generator by the gate.
  void apply(const Gate& g) {
    check_qubit(g.q);
    int i = g.q - 1;
    switch (g.kind) {
      case GateKind::H:
        for (auto& r : rows_) {
          bool x = r.x.get(i), z = r.z.get(i);
          if (x && z) r.neg = !r.neg;
          r.x.assign(i, z);
          r.z.assign(i, x);
        }
        break;
      case GateKind::P:
        for (auto& r : rows_) {
          bool x = r.x.get(i), z = r.z.get(i);
          if (x && z) r.neg = !r.neg;
          r.z.assign(i, z ^ x);
        }
        break;
      case GateKind::Pdag:
        for (auto& r : rows_) {
          bool x = r.x.get(i), z = r.z.get(i);
          if (x && !z) r.neg = !r.neg;
          r.z.assign(i, z ^ x);
        }
        break;
      case GateKind::X:
        for (auto& r : rows_)
          if (r.z.get(i)) r.neg = !r.neg;
        break;
      case GateKind::Y:
        for (auto& r : rows_)
          if (r.x.get(i) ^ r.z.get(i)) r.neg = !r.neg;
        break;
      case GateKind::Z:
        for (auto& r : rows_)
          if (r.x.get(i)) r.neg = !r.neg;
        break;
      case GateKind::CNOT: {
        check_qubit(g.q2);
        if (g.q == g.q2) throw std::invalid_argument("Tableau: CNOT needs distinct qubits");
        int c = g.q - 1, t = g.q2 - 1;
        for (auto& r : rows_) {
          bool xc = r.x.get(c), zc = r.z.get(c), xt = r.x.get(t), zt = r.z.get(t);
          if (xc && zt && !(xt ^ zc)) r.neg = !r.neg;
          r.x.assign(t, xt ^ xc);
          r.z.assign(c, zc ^ zt);
        }
        break;
      }
    }
  }

  void apply(const std::vector<Gate>& gates) {
    for (const auto& g : gates) apply(g);
  }

  // dest <- dest * src. The net power of i must come out even; odd is a hard
  // internal error (it would mean the rows anticommute).
  void rowsum(int dest, int src) {
    if (dest == src) throw std::invalid_argument("rowsum: dest == src");
    Row& d = rows_[dest];
    const Row& s = rows_[src];
    int plus = 0, minus = 0;
    const auto& dx = d.x.words();
    const auto& dz = d.z.words();
    const auto& sx = s.x.words();
    const auto& sz = s.z.words();
    for (std::size_t k = 0; k < dx.size(); ++k) {
      std::uint64_t anti = (dx[k] & sz[k]) ^ (sx[k] & dz[k]);
      while (anti) {
        int b = std::countr_zero(anti);
        anti &= anti - 1;
        bool dxb = (dx[k] >> b) & 1, dzb = (dz[k] >> b) & 1;
        bool sxb = (sx[k] >> b) & 1, szb = (sz[k] >> b) & 1;
        bool up;
        if (dxb && !dzb)
          up = sxb && szb;  // X * Y = iZ, X * Z = -iY
        else if (dxb && dzb)
          up = !sxb && szb;  // Y * Z = iX, Y * X = -iZ
        else
          up = sxb && !szb;  // Z * X = iY, Z * Y = -iX
        (up ? plus : minus)++;
      }
    }
    int temp = ((d.neg ? 2 : 0) + (s.neg ? 2 : 0) + (plus - minus)) % 4;
    if (temp < 0) temp += 4;
    if (temp != 0 && temp != 2) throw std::logic_error("rowsum: odd power of i (anticommuting rows)");
    d.neg = (temp == 2);
    d.x.xor_with(s.x);
    d.z.xor_with(s.z);
  }

  void swap_rows(int a, int b) {
    if (a != b) std::swap(rows_[a], rows_[b]);
  }

  // 1-based leftmost support column of a row; 0 for an all-identity row.
  int leading_column(int r) const {
    int fx = rows_[r].x.find_first();
    int fz = rows_[r].z.find_first();
    if (fx < 0 && fz < 0) return 0;
    if (fx < 0) return fz + 1;
    if (fz < 0) return fx + 1;
    return std::min(fx, fz) + 1;
  }

  // Pauli weight with Y counted once.
  int row_weight(int r) const {
    const auto& xs = rows_[r].x.words();
    const auto& zs = rows_[r].z.words();
    int c = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) c += std::popcount(xs[k] | zs[k]);
    return c;
  }

  // Weight restricted to the emitter columns.
  int emitter_weight(int r) const {
    int c = 0;
    for (int q = n_photons_; q < n_; ++q)
      if (rows_[r].x.get(q) || rows_[r].z.get(q)) ++c;
    return c;
  }

  // Emitters (1-based qubit ids) carrying a non-identity Pauli in row r.
  std::vector<int> emitter_support(int r) const {
    std::vector<int> out;
    for (int q = n_photons_; q < n_; ++q)
      if (rows_[r].x.get(q) || rows_[r].z.get(q)) out.push_back(q + 1);
    return out;
  }

  // Pauli letter at (row, qubit): 'I', 'X', 'Y' or 'Z'.
  char pauli_at(int r, int q) const {
    bool x = rows_[r].x.get(q - 1), z = rows_[r].z.get(q - 1);
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }

  // Row echelon form on leading columns: sorts rows so leftmost support
  // columns are non-decreasing; at most two rows lead at any column (an X/Y
  // row first, then a Z row). Pure row operations, the group is unchanged.
  void rref() {
    int n = num_rows();
    int r = 0;
    for (int c = 0; c < n_ && r < n; ++c) {
      int px = -1;
      for (int k = r; k < n; ++k)
        if (rows_[k].x.get(c)) {
          px = k;
          break;
        }
      if (px >= 0) {
        swap_rows(r, px);
        for (int k = r + 1; k < n; ++k)
          if (rows_[k].x.get(c)) rowsum(k, r);
        ++r;
      }
      if (r >= n) break;
      int pz = -1;
      for (int k = r; k < n; ++k)
        if (rows_[k].z.get(c) && !rows_[k].x.get(c)) {
          pz = k;
          break;
        }
      if (pz >= 0) {
        swap_rows(r, pz);
        for (int k = r + 1; k < n; ++k)
          if (rows_[k].z.get(c) && !rows_[k].x.get(c)) rowsum(k, r);
        ++r;
      }
    }
  }

  // Weight-reducing back-substitution on an RREF tableau (gauge preserved):
  // each row is multiplied by lower rows whenever that does not increase its
  // weight. Processing stops once the given 1-based row is reached.
  void back_substitute(int stop_row = 1) {
    int n = num_rows();
    for (int low = n - 1; low >= stop_row; --low) {
      for (int k = low - 1; k >= 0; --k) {
        int w0 = row_weight(k);
        if (w0 <= 1) continue;
        Row probe = rows_[k];
        probe.x.xor_with(rows_[low].x);
        probe.z.xor_with(rows_[low].z);
        int wa = 0;
        for (std::size_t t = 0; t < probe.x.words().size(); ++t)
          wa += std::popcount(probe.x.words()[t] | probe.z.words()[t]);
        if (wa <= w0) rowsum(k, low);
      }
    }
  }

  // Rows whose leftmost support column equals col (1-based); RREF gives at
  // most two.
  std::vector<int> rows_leading_at(int col) const {
    std::vector<int> out;
    for (int r = 0; r < num_rows(); ++r)
      if (leading_column(r) == col) out.push_back(r);
    return out;
  }

  // Index of the unique weight-1 row on qubit q, or -1.
  int pure_row_of(int q) const {
    for (int r = 0; r < num_rows(); ++r)
      if (leading_column(r) == q && row_weight(r) == 1) return r;
    return -1;
  }

  bool qubit_decoupled(int q) const { return pure_row_of(q) >= 0; }

  // Replaces row r with a fresh single-qubit row (used by measurement/reset).
  void set_row_single(int r, int q, bool x, bool z, bool neg) {
    rows_[r].x.clear();
    rows_[r].z.clear();
    if (x) rows_[r].x.set(q - 1);
    if (z) rows_[r].z.set(q - 1);
    rows_[r].neg = neg;
  }

  bool rows_commute(int a, int b) const {
    const Row& ra = rows_[a];
    const Row& rb = rows_[b];
    int s = ra.x.popcount_and(rb.z) + rb.x.popcount_and(ra.z);
    return (s % 2) == 0;
  }

  // Pairwise commutation and GF(2) independence of the generators.
  bool validate() const {
    int n = num_rows();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (!rows_commute(a, b)) return false;
    // Independence via elimination on (x|z).
    std::vector<std::pair<BitVec, BitVec>> m;
    for (const auto& r : rows_) m.emplace_back(r.x, r.z);
    int rank = 0;
    for (int c = 0; c < 2 * n_ && rank < n; ++c) {
      bool isx = c < n_;
      int bit = isx ? c : c - n_;
      int p = -1;
      for (int k = rank; k < n; ++k) {
        bool v = isx ? m[k].first.get(bit) : m[k].second.get(bit);
        if (v) {
          p = k;
          break;
        }
      }
      if (p < 0) continue;
      std::swap(m[rank], m[p]);
      for (int k = 0; k < n; ++k) {
        if (k == rank) continue;
        bool v = isx ? m[k].first.get(bit) : m[k].second.get(bit);
        if (v) {
          m[k].first.xor_with(m[rank].first);
          m[k].second.xor_with(m[rank].second);
        }
      }
      ++rank;
    }
    return rank == n;
  }

  // Debug dump: one generator per line, +/- then I/X/Y/Z per qubit.
  std::string dump() const {
    std::string out;
    for (int r = 0; r < num_rows(); ++r) {
      out += rows_[r].neg ? '-' : '+';
      for (int q = 1; q <= n_; ++q) out += pauli_at(r, q);
      out += '\n';
    }
    return out;
  }

  std::uint64_t hash(std::uint64_t seed = 0x7461626c65617575ULL) const {
    std::uint64_t h = splitmix64(seed ^ std::uint64_t(n_));
    for (const auto& r : rows_) {
      h = hash_words(h, r.x.words());
      h = hash_words(h, r.z.words());
      h = splitmix64(h ^ (r.neg ? 1 : 0));
    }
    return h;
  }

  bool operator==(const Tableau& o) const {
    if (n_ != o.n_ || n_photons_ != o.n_photons_ || rows_.size() != o.rows_.size()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r].x != o.rows_[r].x || rows_[r].z != o.rows_[r].z || rows_[r].neg != o.rows_[r].neg)
        return false;
    return true;
  }

 private:
  int n_ = 0;
  int n_photons_ = 0;
  std::vector<Row> rows_;
};

// Bipartite entanglement entropy across the emission cut after x photons,
// computed from the echelon structure: h[x] = #{rows leading at column <= x}
// minus x, for x = 0..n_photons.
inline std::vector<int> height_profile(const Tableau& t_in) {
  Tableau t = t_in;
  t.rref();
  int np = t.num_photons();
  std::vector<int> leq(np + 1, 0);
  for (int r = 0; r < t.num_rows(); ++r) {
    int lc = t.leading_column(r);
    if (lc >= 1 && lc <= np) leq[lc]++;
  }
  std::vector<int> h(np + 1, 0);
  int acc = 0;
  for (int x = 0; x <= np; ++x) {
    if (x >= 1) acc += leq[x];
    h[x] = acc - x;
  }
  return h;
}

// Height function of a photon-only target tableau whose columns follow the
// emission ordering.
inline std::vector<int> height(const Tableau& t_photonic) {
  if (t_photonic.num_emitters() != 0)
    throw std::invalid_argument("height: expected a photon-only tableau");
  return height_profile(t_photonic);
}

inline int num_emitters(const Tableau& t_photonic) {
  auto h = height(t_photonic);
  int m = 0;
  for (int v : h) m = std::max(m, v);
  return m;
}

// Permutes graph vertices into emission-column order: column k of the result
// is vertex ordering[k-1] of g.
inline Graph emission_permuted(const Graph& g, const std::vector<int>& ordering) {
  if (ordering.empty()) return g;
  std::vector<bool> seen(g.order() + 1, false);
  if (int(ordering.size()) != g.order())
    throw std::invalid_argument("emission ordering: wrong length");
  for (int v : ordering) {
    if (v < 1 || v > g.order() || seen[v]) throw std::invalid_argument("emission ordering: not a permutation");
    seen[v] = true;
  }
  return g.permuted(ordering);
}

inline int num_emitters_for(const Graph& g, const std::vector<int>& ordering = {}) {
  return num_emitters(Tableau::from_graph(emission_permuted(g, ordering)));
}

struct GraphExtraction {
  Graph graph;
  std::vector<Gate> local_ops;
};

// Canonical graph-state reduction: Gaussian elimination, Hadamards on
// non-pivot columns, then phase fixes. The returned gates map the input
// state onto the graph state of the returned graph.
inline GraphExtraction to_graph(const Tableau& t_in) {
  Tableau t = t_in;
  int n = t.num_qubits();
  if (t.num_rows() != n) throw std::invalid_argument("to_graph: malformed tableau");
  std::vector<Gate> ops;

  std::vector<bool> pivot(n, false);
  auto echelon_x = [&]() {
    std::fill(pivot.begin(), pivot.end(), false);
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
      int p = -1;
      for (int k = r; k < n; ++k)
        if (t.row(k).x.get(c)) {
          p = k;
          break;
        }
      if (p < 0) continue;
      t.swap_rows(r, p);
      for (int k = 0; k < n; ++k)
        if (k != r && t.row(k).x.get(c)) t.rowsum(k, r);
      pivot[c] = true;
      ++r;
    }
    return r;
  };

  int rank = echelon_x();
  if (rank < n) {
    // Hadamard the columns without an X pivot; afterwards the X block has
    // full rank.
    for (int c = 0; c < n; ++c)
      if (!pivot[c]) {
        Gate h{GateKind::H, c + 1};
        t.apply(h);
        ops.push_back(h);
      }
    rank = echelon_x();
    if (rank != n) throw std::logic_error("to_graph: X block not invertible (dependent rows?)");
  }

  for (int q = 0; q < n; ++q) {
    assert(t.row(q).x.get(q));
    if (t.row(q).z.get(q)) {
      Gate p{GateKind::P, q + 1};
      t.apply(p);
      ops.push_back(p);
    }
  }
  for (int q = 0; q < n; ++q)
    if (t.row(q).neg) {
      Gate zg{GateKind::Z, q + 1};
      t.apply(zg);
      ops.push_back(zg);
    }

  Graph g(n);
  for (int a = 0; a < n; ++a)
    t.row(a).z.for_each_set([&](int b) {
      if (b > a) g.add_edge(a + 1, b + 1);
      if (b != a && !t.row(b).z.get(a)) throw std::logic_error("to_graph: asymmetric Z block");
    });
  return GraphExtraction{std::move(g), std::move(ops)};
}

}  // namespace gsf

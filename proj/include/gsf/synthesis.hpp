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
#include <limits>
#include <optional>

#include "gsf/circuit.hpp"
#include "gsf/graph.hpp"
#include "gsf/orbits.hpp"
#include "gsf/random.hpp"
#include "gsf/tableau.hpp"

namespace gsf {

struct OptimizerOptions {
  bool backsub_global = false;
  bool exhaust_free_pa = false;
  int lc_rounds = 0;
  std::optional<int> prune_per_level;
  std::optional<int> emitter_cutoff;
  std::optional<int> future_cutoff;
  bool recurse_further = false;
  enum class LocalGates { Full6, Reduced4 };
  LocalGates h1_local_gate_set = LocalGates::Full6;
  // Run the (backsub, exhaust) in {(0,0),(1,0),(0,1)} variants, keep the best.
  bool variant_sweep = false;
  std::size_t node_budget = 2000000;  // brute-force state expansions
  bool keep_trace = false;
  std::vector<std::uint64_t> verify_seeds = {1, 2};

  void check() const {
    if (prune_per_level && *prune_per_level < 1)
      throw std::invalid_argument("OptimizerOptions: prune_per_level >= 1");
    if (emitter_cutoff && *emitter_cutoff < 1)
      throw std::invalid_argument("OptimizerOptions: emitter_cutoff >= 1");
    if (future_cutoff && *future_cutoff < 0)
      throw std::invalid_argument("OptimizerOptions: future_cutoff >= 0");
  }
};

enum class Optimizer { Naive, H1, H2, Brute };

struct SynthesisResult {
  Circuit circuit;  // forward direction, verified
  int emitter_cnots = 0;
  int num_emitters = 0;
  std::vector<Graph> trace;  // per-step graph snapshots when requested
};

namespace synth_detail {

inline OpKind op_of_gate(GateKind k) {
  switch (k) {
    case GateKind::H: return OpKind::H;
    case GateKind::P: return OpKind::P;
    case GateKind::Pdag: return OpKind::Pdag;
    case GateKind::X: return OpKind::X;
    case GateKind::Y: return OpKind::Y;
    case GateKind::Z: return OpKind::Z;
    case GateKind::CNOT: return OpKind::CNOT;
  }
  return OpKind::H;
}

// Gate recording shim: applies to the tableau, optionally stores the op and
// always tracks the emitter-emitter CNOT count.
struct Recorder {
  Tableau* t;
  std::vector<CircuitOp>* ops = nullptr;  // null: probe mode, gates not stored
  int* cnots = nullptr;

  void gate(GateKind k, int q, int q2 = 0) {
    t->apply(Gate{k, q, q2});
    if (k == GateKind::CNOT && t->is_emitter(q) && t->is_emitter(q2) && cnots) (*cnots)++;
    if (ops) ops->push_back(CircuitOp{op_of_gate(k), q, q2, {}});
  }

  void trm_op(int e, int j) {
    t->apply(Gate{GateKind::H, e});
    t->apply(Gate{GateKind::CNOT, e, j});
    if (ops) ops->push_back(CircuitOp{OpKind::TRM, e, j, {}});
  }
};

// Multiplies every weight-1 generator into the other rows that still touch
// its qubit, so decoupled qubits own exactly one row.
inline void clean_pure_columns(Tableau& t) {
  for (int r = 0; r < t.num_rows(); ++r) {
    if (t.row_weight(r) != 1) continue;
    int q = t.leading_column(r);
    bool px = t.row(r).x.get(q - 1), pz = t.row(r).z.get(q - 1);
    for (int k = 0; k < t.num_rows(); ++k) {
      if (k == r) continue;
      bool kx = t.row(k).x.get(q - 1), kz = t.row(k).z.get(q - 1);
      if (!kx && !kz) continue;
      if (kx != px || kz != pz)
        throw std::logic_error("clean_pure_columns: support incompatible with a pure row");
      t.rowsum(k, r);
    }
  }
}

// Height profile of an already-echelonized tableau.
inline std::vector<int> height_from_rref(const Tableau& t) {
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

// Turns the Pauli at (row, q) into Z by local gates (X -> H, Y -> Pdag H).
inline void rotate_to_z(Recorder& rec, int row, int q) {
  char p = rec.t->pauli_at(row, q);
  if (p == 'X') {
    rec.gate(GateKind::H, q);
  } else if (p == 'Y') {
    rec.gate(GateKind::Pdag, q);
    rec.gate(GateKind::H, q);
  }
}

// Puts a decoupled qubit into |0> (its pure row becomes +Z).
inline void rotate_pure_to_zero(Recorder& rec, int q) {
  Tableau& t = *rec.t;
  int r = t.pure_row_of(q);
  if (r < 0) throw std::logic_error("rotate_pure_to_zero: qubit is not decoupled");
  rotate_to_z(rec, r, q);
  if (t.row(r).neg) rec.gate(GateKind::X, q);
}

// Absorbs photon j using row r and the chosen emitter: rotates the photon and
// every emitter Pauli of the row to Z, fans CNOTs from the other emitters
// into the absorber, then applies the absorbing emitter-photon CNOT. Returns
// the number of emitter CNOTs spent.
inline int fan_and_absorb(Recorder& rec, int row, int absorber, int j) {
  Tableau& t = *rec.t;
  rotate_to_z(rec, row, j);
  std::vector<int> emitters = t.emitter_support(row);
  if (emitters.empty()) throw std::logic_error("fan_and_absorb: no emitter in the photonic row");
  for (int e : emitters) rotate_to_z(rec, row, e);
  int spent = 0;
  for (int e : emitters)
    if (e != absorber) {
      rec.gate(GateKind::CNOT, e, absorber);
      ++spent;
    }
  rec.gate(GateKind::CNOT, absorber, j);
  if (!(t.row_weight(row) == 1 && t.leading_column(row) == j && t.pauli_at(row, j) == 'Z'))
    throw std::logic_error("fan_and_absorb: absorption did not decouple the photon");
  clean_pure_columns(t);
  return spent;
}

// Free photon-absorption cascade: (1) a photonic row with emitter weight one,
// (2) the product of the two photonic rows, (3) products with emitter-only
// stabilizers, and optionally (4) back-substitution down to the photonic row.
// Returns the absorbing row or nothing; the tableau is modified only on
// success.
inline std::optional<int> free_absorption_row(Tableau& t, int j, bool exhaust) {
  std::vector<int> rows = t.rows_leading_at(j);
  if (rows.empty()) return std::nullopt;
  if (rows.size() > 2) throw std::logic_error("free_absorption_row: tableau not in RREF");

  for (int r : rows)
    if (t.emitter_weight(r) == 1) return r;

  auto probe_weight = [&](int a, int b) {
    int w = 0;
    for (int q = t.num_photons(); q < t.num_qubits(); ++q) {
      bool x = t.row(a).x.get(q) ^ t.row(b).x.get(q);
      bool z = t.row(a).z.get(q) ^ t.row(b).z.get(q);
      if (x || z) ++w;
    }
    return w;
  };

  if (rows.size() == 2 && probe_weight(rows[0], rows[1]) == 1) {
    t.rowsum(rows[0], rows[1]);
    return rows[0];
  }

  std::vector<int> emitter_rows;
  for (int r = 0; r < t.num_rows(); ++r)
    if (t.leading_column(r) > t.num_photons()) emitter_rows.push_back(r);
  for (int r : rows)
    for (int er : emitter_rows)
      if (probe_weight(r, er) == 1) {
        t.rowsum(r, er);
        return r;
      }

  if (exhaust) {
    int indx = *std::min_element(rows.begin(), rows.end());
    Tableau saved = t;
    t.back_substitute(indx + 1);
    if (t.emitter_weight(indx) == 1 && t.leading_column(indx) == j) return indx;
    t = saved;  // discarded on failure
  }
  return std::nullopt;
}

// Two-emitter decoupling rules: the Pauli pair picks the local gates and the
// CNOT that reduce a weight-2 emitter-only stabilizer to weight one.
inline void apply_pair_rule(Recorder& rec, int e1, int e2) {
  int row = -1;
  for (int r = 0; r < rec.t->num_rows(); ++r) {
    if (rec.t->row_weight(r) != 2) continue;
    if (rec.t->leading_column(r) <= rec.t->num_photons()) continue;
    auto sup = rec.t->emitter_support(r);
    if (sup.size() == 2 && sup[0] == std::min(e1, e2) && sup[1] == std::max(e1, e2)) {
      row = r;
      break;
    }
  }
  if (row < 0) throw std::invalid_argument("disentangle_pair: no weight-2 emitter stabilizer on the pair");

  auto rule = [&](int a, int b) -> bool {
    char pa = rec.t->pauli_at(row, a);
    char pb = rec.t->pauli_at(row, b);
    if (pa == 'Z' && pb == 'Z') {
      rec.gate(GateKind::CNOT, a, b);
    } else if (pa == 'X' && pb == 'X') {
      rec.gate(GateKind::CNOT, a, b);
    } else if (pa == 'Y' && pb == 'Z') {
      rec.gate(GateKind::CNOT, b, a);
    } else if (pa == 'X' && pb == 'Z') {
      rec.gate(GateKind::H, b);
      rec.gate(GateKind::CNOT, a, b);
    } else if (pa == 'X' && pb == 'Y') {
      rec.gate(GateKind::CNOT, b, a);
    } else if (pa == 'Y' && pb == 'Y') {
      rec.gate(GateKind::P, b);
      rec.gate(GateKind::CNOT, a, b);
    } else {
      return false;
    }
    return true;
  };

  int a = std::min(e1, e2), b = std::max(e1, e2);
  if (!rule(a, b) && !rule(b, a))
    throw std::logic_error("disentangle_pair: Pauli pair not covered by the rule table");
  if (rec.t->row_weight(row) != 1)
    throw std::logic_error("disentangle_pair: pair rule failed to decouple");
  clean_pure_columns(*rec.t);
}

// One pass of the final emitter disentanglement: picks the minimum-weight
// entangled row, rotates it to Z's and spends one CNOT. Returns false when
// every emitter is already in a product state.
inline bool disentangle_pass(Recorder& rec, bool backsub) {
  Tableau& t = *rec.t;
  t.rref();
  clean_pure_columns(t);
  if (backsub) t.back_substitute();
  int best = -1, bw = std::numeric_limits<int>::max();
  for (int r = 0; r < t.num_rows(); ++r) {
    int w = t.row_weight(r);
    if (w >= 2 && w < bw) {
      best = r;
      bw = w;
    }
  }
  if (best < 0) return false;
  if (t.leading_column(best) <= t.num_photons())
    throw std::logic_error("final_disentanglement: photonic support after absorption");

  std::vector<int> zs, xs, ys;
  for (int e : t.emitter_support(best)) {
    char p = t.pauli_at(best, e);
    (p == 'Z' ? zs : p == 'X' ? xs : ys).push_back(e);
  }
  auto fire = [&]() {
    rec.gate(GateKind::CNOT, zs[0], zs[1]);
    clean_pure_columns(t);
  };
  if (zs.size() >= 2) {
    fire();
    return true;
  }
  for (int e : xs) {
    rec.gate(GateKind::H, e);
    zs.push_back(e);
    if (zs.size() == 2) {
      fire();
      return true;
    }
  }
  for (int e : ys) {
    rec.gate(GateKind::P, e);
    rec.gate(GateKind::H, e);
    zs.push_back(e);
    if (zs.size() == 2) {
      fire();
      return true;
    }
  }
  throw std::logic_error("final_disentanglement: weight-2+ row with fewer than two emitters");
}

// Bit-only adjacency extraction over the given 1-based columns (no phase
// tracking); used by the connectivity searches.
struct BitMat {
  int m = 0;
  std::vector<BitVec> x, z;
};

inline BitMat live_bits(const Tableau& t, const std::vector<int>& cols) {
  BitMat b;
  b.m = int(cols.size());
  std::vector<int> colmap(t.num_qubits() + 1, -1);
  for (int i = 0; i < b.m; ++i) colmap[cols[i]] = i;
  for (int r = 0; r < t.num_rows(); ++r) {
    int lc = t.leading_column(r);
    if (lc == 0 || colmap[lc] < 0) continue;
    BitVec x(b.m), z(b.m);
    t.row(r).x.for_each_set([&](int q) {
      if (colmap[q + 1] >= 0) x.set(colmap[q + 1]);
    });
    t.row(r).z.for_each_set([&](int q) {
      if (colmap[q + 1] >= 0) z.set(colmap[q + 1]);
    });
    b.x.push_back(std::move(x));
    b.z.push_back(std::move(z));
  }
  if (int(b.x.size()) != b.m) throw std::logic_error("live_bits: unexpected row count");
  return b;
}

inline void bitmat_h(BitMat& b, int c) {
  for (int r = 0; r < b.m; ++r) {
    bool x = b.x[r].get(c), z = b.z[r].get(c);
    b.x[r].assign(c, z);
    b.z[r].assign(c, x);
  }
}

inline void bitmat_cnot(BitMat& b, int c, int t) {
  for (int r = 0; r < b.m; ++r) {
    if (b.x[r].get(c)) b.x[r].flip(t);
    if (b.z[r].get(t)) b.z[r].flip(c);
  }
}

// Clifford on one column, by name from {I,H,P,HP,PH,HPH}; bit action only.
inline void bitmat_local(BitMat& b, int c, int which) {
  auto H = [&]() { bitmat_h(b, c); };
  auto P = [&]() {
    for (int r = 0; r < b.m; ++r)
      if (b.x[r].get(c)) b.z[r].flip(c);
  };
  switch (which) {
    case 0: break;           // I
    case 1: H(); break;      // H
    case 2: P(); break;      // P
    case 3: P(); H(); break; // HP (P first)
    case 4: H(); P(); break; // PH (H first)
    case 5: H(); P(); H(); break;  // HPH
  }
}

// Canonical graph adjacency of a bit matrix (destructive).
inline std::vector<BitVec> bitmat_adjacency(BitMat b) {
  int m = b.m;
  std::vector<bool> pivot(m, false);
  auto echelon = [&]() {
    std::fill(pivot.begin(), pivot.end(), false);
    int r = 0;
    for (int c = 0; c < m && r < m; ++c) {
      int p = -1;
      for (int k = r; k < m; ++k)
        if (b.x[k].get(c)) {
          p = k;
          break;
        }
      if (p < 0) continue;
      std::swap(b.x[r], b.x[p]);
      std::swap(b.z[r], b.z[p]);
      for (int k = 0; k < m; ++k)
        if (k != r && b.x[k].get(c)) {
          b.x[k].xor_with(b.x[r]);
          b.z[k].xor_with(b.z[r]);
        }
      pivot[c] = true;
      ++r;
    }
    return r;
  };
  int rank = echelon();
  if (rank < m) {
    for (int c = 0; c < m; ++c)
      if (!pivot[c]) bitmat_h(b, c);
    rank = echelon();
    if (rank != m) throw std::logic_error("bitmat_adjacency: dependent rows");
  }
  for (int q = 0; q < m; ++q) b.z[q].reset(q);
  return b.z;
}

inline int adjacency_components(const std::vector<BitVec>& adj) {
  int m = int(adj.size());
  std::vector<bool> seen(m, false);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    ++comps;
    stack.push_back(s);
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      adj[u].for_each_set([&](int w) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      });
    }
  }
  return comps;
}

inline int adjacency_edges(const std::vector<BitVec>& adj) {
  int s = 0;
  for (const auto& r : adj) s += r.popcount();
  return s / 2;
}

}  // namespace synth_detail

// ---------------------------------------------------------------------------
// Spec-level tableau operations (also used internally by the optimizers).

// Re-entangles a decoupled emitter with the neighborhood of the next photon:
// |0> preparation, Hadamard, then CNOT(emitter, photon). Throws when the
// emitter is still entangled.
inline std::vector<CircuitOp> time_reversed_measurement(Tableau& t, int emitter, int photon) {
  if (!t.is_emitter(emitter)) throw std::invalid_argument("time_reversed_measurement: not an emitter");
  if (t.pure_row_of(emitter) < 0)
    throw std::invalid_argument("time_reversed_measurement: emitter is not decoupled");
  std::vector<CircuitOp> ops;
  synth_detail::Recorder rec{&t, &ops, nullptr};
  synth_detail::rotate_pure_to_zero(rec, emitter);
  rec.trm_op(emitter, photon);
  return ops;
}

struct FreeAbsorptionResult {
  bool absorbed = false;
  std::vector<CircuitOp> gates;
};

// Photon absorption without emitter-emitter CNOTs, when the cascade of row
// manipulations allows it. The tableau must be in RREF.
inline FreeAbsorptionResult try_free_absorption(Tableau& t, int photon, const OptimizerOptions& opts) {
  FreeAbsorptionResult res;
  auto row = synth_detail::free_absorption_row(t, photon, opts.exhaust_free_pa);
  if (!row) return res;
  int cnots = 0;
  synth_detail::Recorder rec{&t, &res.gates, &cnots};
  auto emitters = t.emitter_support(*row);
  if (emitters.size() != 1) throw std::logic_error("try_free_absorption: weight mismatch");
  synth_detail::fan_and_absorb(rec, *row, emitters[0], photon);
  if (cnots != 0) throw std::logic_error("try_free_absorption: free path spent a CNOT");
  res.absorbed = true;
  return res;
}

// Applies the two-emitter decoupling rule table to the weight-2 stabilizer on
// (e1, e2); exactly one CNOT is spent.
inline std::vector<CircuitOp> disentangle_pair(Tableau& t, int e1, int e2) {
  std::vector<CircuitOp> ops;
  int cnots = 0;
  synth_detail::Recorder rec{&t, &ops, &cnots};
  synth_detail::apply_pair_rule(rec, e1, e2);
  return ops;
}

// Disentangles all emitters once every photon has been absorbed.
inline std::vector<CircuitOp> final_disentanglement(Tableau& t, const OptimizerOptions& opts) {
  std::vector<CircuitOp> ops;
  int cnots = 0;
  synth_detail::Recorder rec{&t, &ops, &cnots};
  int guard = 4 * (t.num_qubits() + 1) * (t.num_qubits() + 1);
  while (synth_detail::disentangle_pass(rec, opts.backsub_global))
    if (--guard < 0) throw std::logic_error("final_disentanglement: no progress");
  return ops;
}

// ---------------------------------------------------------------------------
// Measurement-capable simulation, used by the verifier.

namespace synth_detail {

enum class OutcomeMode { Seeded, Force0, Force1 };

// Measures Z on qubit q. Afterwards the tableau holds an explicit pure +/-Z
// row for q and no other row touches q.
inline int measure_z(Tableau& t, int q, OutcomeMode mode, Rng& rng, bool* was_random = nullptr) {
  int qi = q - 1;
  int anti = -1;
  for (int r = 0; r < t.num_rows(); ++r)
    if (t.row(r).x.get(qi)) {
      anti = r;
      break;
    }
  if (anti >= 0) {
    if (was_random) *was_random = true;
    for (int r = anti + 1; r < t.num_rows(); ++r)
      if (t.row(r).x.get(qi)) t.rowsum(r, anti);
    int outcome = mode == OutcomeMode::Force0 ? 0 : mode == OutcomeMode::Force1 ? 1 : int(rng.next() & 1);
    t.set_row_single(anti, q, false, true, outcome == 1);
    for (int r = 0; r < t.num_rows(); ++r)
      if (r != anti && t.row(r).z.get(qi)) t.rowsum(r, anti);
    return outcome;
  }
  if (was_random) *was_random = false;
  // Deterministic: reduce Z_q against an echelonized copy, tracking which
  // rows build it, then expose the product as an explicit generator.
  Tableau copy = t;
  std::vector<int> origin(copy.num_rows());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = int(i);
  // Echelonize while remembering the permutation; reductions use rowsum on
  // the original tableau indices via a parallel combination table.
  // Simpler: work on the original tableau directly with full elimination,
  // which is a legal gauge change.
  t.rref();
  BitVec tx(t.num_qubits()), tz(t.num_qubits());
  tz.set(qi);
  bool tneg = false;
  int last_used = -1;
  while (tx.any() || tz.any()) {
    int fx = tx.find_first(), fz = tz.find_first();
    int lead = fx < 0 ? fz : (fz < 0 ? fx : std::min(fx, fz));
    bool want_x = tx.get(lead);
    int hit = -1;
    for (int r = 0; r < t.num_rows(); ++r) {
      if (t.leading_column(r) != lead + 1) continue;
      if (t.row(r).x.get(lead) == want_x &&
          (want_x || t.row(r).z.get(lead))) {
        hit = r;
        break;
      }
    }
    if (hit < 0) throw std::logic_error("measure_z: deterministic outcome not in the group");
    // Multiply row `hit` into the target (dense phase arithmetic).
    int plus = 0, minus = 0;
    for (int c = 0; c < t.num_qubits(); ++c) {
      bool ax = tx.get(c), az = tz.get(c);
      bool bx = t.row(hit).x.get(c), bz = t.row(hit).z.get(c);
      if ((ax && bz) == (bx && az)) continue;  // commuting position
      bool up;
      if (ax && !az)
        up = bx && bz;
      else if (ax && az)
        up = !bx && bz;
      else
        up = bx && !bz;
      (up ? plus : minus)++;
    }
    int temp = ((tneg ? 2 : 0) + (t.row(hit).neg ? 2 : 0) + plus - minus) % 4;
    if (temp < 0) temp += 4;
    if (temp % 2 != 0) throw std::logic_error("measure_z: anticommuting reduction");
    tneg = temp == 2;
    tx.xor_with(t.row(hit).x);
    tz.xor_with(t.row(hit).z);
    last_used = hit;
  }
  int outcome = tneg ? 1 : 0;
  // Exchange the last used generator for +/-Z_q (an invertible gauge move),
  // then clean the column.
  t.set_row_single(last_used, q, false, true, tneg);
  for (int r = 0; r < t.num_rows(); ++r)
    if (r != last_used && t.row(r).z.get(qi)) t.rowsum(r, last_used);
  return outcome;
}

// Unique reduced form over GF(2)^(2n) with interleaved (x,z) column order;
// two tableaus describe the same stabilizer group (phases included) iff their
// canonical forms match row for row.
inline Tableau canonical_form(Tableau t) {
  int n = t.num_qubits();
  int r = 0;
  for (int c = 0; c < n && r < t.num_rows(); ++c) {
    for (int pass = 0; pass < 2 && r < t.num_rows(); ++pass) {
      auto bit = [&](int row) {
        return pass == 0 ? t.row(row).x.get(c) : (t.row(row).z.get(c) && !t.row(row).x.get(c));
      };
      if (pass == 1) {
        // For the z pass only rows without an x bit at c are eligible; the x
        // pass already cleared x bits below r.
      }
      int p = -1;
      for (int k = r; k < t.num_rows(); ++k)
        if (bit(k)) {
          p = k;
          break;
        }
      if (p < 0) continue;
      t.swap_rows(r, p);
      for (int k = 0; k < t.num_rows(); ++k) {
        if (k == r) continue;
        bool kb = pass == 0 ? t.row(k).x.get(c) : t.row(k).z.get(c);
        if (kb) t.rowsum(k, r);
      }
      ++r;
    }
  }
  return t;
}

inline bool same_group(const Tableau& a, const Tableau& b) {
  if (a.num_qubits() != b.num_qubits() || a.num_rows() != b.num_rows()) return false;
  Tableau ca = canonical_form(a), cb = canonical_form(b);
  for (int r = 0; r < ca.num_rows(); ++r)
    if (!(ca.row(r).x == cb.row(r).x && ca.row(r).z == cb.row(r).z && ca.row(r).neg == cb.row(r).neg))
      return false;
  return true;
}

}  // namespace synth_detail

// Simulates the forward circuit from |0...0>, sampling measurement outcomes,
// and checks that the photons end in the target graph state (phases +1) with
// every emitter back in |0>. Deterministic and forced-outcome passes are run
// in addition to the seeded ones.
inline bool verify_circuit(const Circuit& fwd, const Graph& target, const std::vector<int>& ordering,
                           const std::vector<std::uint64_t>& seeds = {1, 2}) {
  using namespace synth_detail;
  if (fwd.time_reversed) throw std::invalid_argument("verify_circuit: circuit must be forward");
  if (!circuit_well_formed(fwd)) return false;
  if (fwd.n_photons != target.order()) return false;

  Graph gperm = emission_permuted(target, ordering);
  Tableau expected = Tableau::from_graph(gperm);
  expected.add_emitters(fwd.n_emitters);

  std::vector<std::pair<OutcomeMode, std::uint64_t>> modes{{OutcomeMode::Force0, 0},
                                                           {OutcomeMode::Force1, 0}};
  for (auto s : seeds) modes.emplace_back(OutcomeMode::Seeded, s);

  for (auto [mode, seed] : modes) {
    Rng rng(seed);
    Tableau sim = Tableau::from_graph(Graph(fwd.n_photons));
    sim.add_emitters(fwd.n_emitters);
    // All qubits start in |0>: flip the photon rows from +X to +Z.
    for (int q = 1; q <= fwd.n_photons; ++q) sim.apply(Gate{GateKind::H, q});

    for (const auto& op : fwd.ops) {
      switch (op.g) {
        case OpKind::H: sim.apply(Gate{GateKind::H, op.q}); break;
        case OpKind::P: sim.apply(Gate{GateKind::P, op.q}); break;
        case OpKind::Pdag: sim.apply(Gate{GateKind::Pdag, op.q}); break;
        case OpKind::X: sim.apply(Gate{GateKind::X, op.q}); break;
        case OpKind::Y: sim.apply(Gate{GateKind::Y, op.q}); break;
        case OpKind::Z: sim.apply(Gate{GateKind::Z, op.q}); break;
        case OpKind::CNOT: sim.apply(Gate{GateKind::CNOT, op.q, op.q2}); break;
        case OpKind::MZ: {
          int outcome = measure_z(sim, op.q, mode, rng);
          if (outcome == 1)
            for (const auto& cp : op.cond)
              sim.apply(Gate{cp.g == OpKind::X ? GateKind::X : cp.g == OpKind::Y ? GateKind::Y : GateKind::Z,
                             cp.q});
          break;
        }
        case OpKind::ResetPlus: {
          // Re-initialization in |0>: the emitter was just measured, so it
          // sits in a computational state; force it to +Z.
          int r = sim.pure_row_of(op.q);
          if (r < 0 || sim.pauli_at(r, op.q) != 'Z') return false;
          sim.set_row_single(r, op.q, false, true, false);
          break;
        }
        case OpKind::TRM:
          return false;
      }
    }
    if (!same_group(sim, expected)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The backward-construction engine and the four optimizers.

namespace synth_detail {

class Engine {
 public:
  Engine(const Graph& g, std::vector<int> ordering, OptimizerOptions opts)
      : target_(g), ordering_(std::move(ordering)), opts_(opts) {
    opts_.check();
    if (!is_connected(g))
      throw std::invalid_argument("synthesize: graph must be connected (split disconnected inputs per component)");
    if (ordering_.empty()) {
      ordering_.resize(g.order());
      for (int i = 0; i < g.order(); ++i) ordering_[i] = i + 1;
    }
    gperm_ = emission_permuted(g, ordering_);
    n_p_ = g.order();
    Tableau t0 = Tableau::from_graph(gperm_);
    auto h = height(t0);
    n_e_ = std::max(1, *std::max_element(h.begin(), h.end()));
  }

  struct Ctx {
    Tableau t;
    std::vector<CircuitOp> ops;
    bool record = true;
    int cnots = 0;
    int next_photon = 0;
    int lc_left = 0;
    std::vector<Graph> trace;
  };

  int num_emitters() const { return n_e_; }

  Ctx make_root() {
    Ctx c;
    c.t = Tableau::from_graph(gperm_);
    c.t.add_emitters(n_e_);
    c.next_photon = n_p_;
    c.lc_left = opts_.lc_rounds;
    return c;
  }

  Recorder rec(Ctx& c) { return Recorder{&c.t, c.record ? &c.ops : nullptr, &c.cnots}; }

  void snapshot(Ctx& c) {
    if (!opts_.keep_trace || !c.record) return;
    c.trace.push_back(extract_full_graph(c.t));
  }

  static Graph extract_full_graph(const Tableau& t) {
    std::vector<int> cols(t.num_qubits());
    for (int i = 0; i < t.num_qubits(); ++i) cols[i] = i + 1;
    auto adj = bitmat_adjacency(live_bits(t, cols));
    Graph g(t.num_qubits());
    for (int a = 0; a < t.num_qubits(); ++a)
      adj[a].for_each_set([&](int b) {
        if (b > a) g.add_edge(a + 1, b + 1);
      });
    return g;
  }

  std::vector<int> live_columns(const Ctx& c) const {
    std::vector<int> cols;
    for (int q = 1; q <= c.next_photon; ++q) cols.push_back(q);
    for (int q = n_p_ + 1; q <= n_p_ + n_e_; ++q) cols.push_back(q);
    return cols;
  }

  void prepare(Ctx& c, bool with_backsub) {
    c.t.rref();
    clean_pure_columns(c.t);
    if (with_backsub) c.t.back_substitute();
  }

  // Entangles a decoupled emitter with the upcoming photon's neighborhood;
  // when every emitter is busy, the cheapest emitter-only stabilizer is
  // collapsed first (those CNOTs are part of the cost).
  void do_trm(Ctx& c, int j) {
    Recorder r = rec(c);
    int free_e = -1;
    for (int e = n_p_ + 1; e <= n_p_ + n_e_; ++e)
      if (c.t.pure_row_of(e) >= 0) {
        free_e = e;
        break;
      }
    if (free_e < 0) {
      int best = -1, bw = std::numeric_limits<int>::max();
      for (int k = 0; k < c.t.num_rows(); ++k)
        if (c.t.leading_column(k) > n_p_ && c.t.row_weight(k) < bw && c.t.row_weight(k) >= 2) {
          best = k;
          bw = c.t.row_weight(k);
        }
      if (best < 0) throw std::logic_error("do_trm: no emitter stabilizer to collapse");
      auto emitters = c.t.emitter_support(best);
      for (int e : emitters) rotate_to_z(r, best, e);
      for (std::size_t i = 1; i < emitters.size(); ++i) r.gate(GateKind::CNOT, emitters[i], emitters[0]);
      clean_pure_columns(c.t);
      free_e = emitters[0];
    }
    rotate_pure_to_zero(r, free_e);
    r.trm_op(free_e, j);
    snapshot(c);
  }

  enum class Status { Done, Forced, Paused };

  // Runs TRMs and free absorptions until a CNOT-requiring absorption (or the
  // photon list is exhausted). With max_absorb >= 0 the loop pauses after
  // that many absorptions; `absorbed` reports how many happened.
  Status advance(Ctx& c, bool exhaust, bool backsub, int max_absorb = -1, int* absorbed = nullptr) {
    int done = 0;
    if (absorbed) *absorbed = 0;
    while (c.next_photon >= 1) {
      if (max_absorb >= 0 && done >= max_absorb) return Status::Paused;
      int j = c.next_photon;
      prepare(c, backsub);
      auto h = height_from_rref(c.t);
      if (h[j] - h[j - 1] < 0) {
        do_trm(c, j);
        prepare(c, false);
      }
      auto row = free_absorption_row(c.t, j, exhaust);
      if (!row) return Status::Forced;
      Recorder r = rec(c);
      auto emitters = c.t.emitter_support(*row);
      if (emitters.size() != 1) throw std::logic_error("advance: free row weight mismatch");
      fan_and_absorb(r, *row, emitters[0], j);
      c.next_photon--;
      ++done;
      if (absorbed) *absorbed = done;
      snapshot(c);
    }
    return Status::Done;
  }

  void absorb_forced(Ctx& c, int row, int absorber, int j) {
    Recorder r = rec(c);
    fan_and_absorb(r, row, absorber, j);
    c.next_photon--;
    snapshot(c);
  }

  void finish(Ctx& c, bool backsub) {
    Recorder r = rec(c);
    int guard = 4 * (c.t.num_qubits() + 1) * (c.t.num_qubits() + 1);
    while (disentangle_pass(r, backsub))
      if (--guard < 0) throw std::logic_error("finish: disentanglement stuck");
    // Residual Z-string cleanup and phase fixing: rotate every qubit to +Z.
    c.t.rref();
    clean_pure_columns(c.t);
    for (int q = 1; q <= c.t.num_qubits(); ++q) rotate_pure_to_zero(r, q);
    for (int k = 0; k < c.t.num_rows(); ++k)
      if (c.t.row_weight(k) != 1 || c.t.row(k).neg)
        throw std::logic_error("finish: tableau is not |0...0>");
    snapshot(c);
  }

  // Photonic rows leading at j; the forced handlers work on the one with
  // minimal emitter weight (ties: first).
  int pick_min_weight_row(Ctx& c, int j) {
    auto rows = c.t.rows_leading_at(j);
    if (rows.empty()) throw std::logic_error("forced absorption: no photonic row");
    int best = rows[0];
    for (int r : rows)
      if (c.t.emitter_weight(r) < c.t.emitter_weight(best)) best = r;
    return best;
  }

  void naive_forced(Ctx& c, int j) {
    int row = pick_min_weight_row(c, j);
    auto emitters = c.t.emitter_support(row);
    if (emitters.empty()) throw std::logic_error("naive_forced: photonic row without emitters");
    absorb_forced(c, row, emitters[0], j);
  }

  // Heuristic steps 1 and 3: deterministic emitter removal through weight-2
  // emitter stabilizers, then the connectivity-increasing local-gate/CNOT
  // search. Returns true if the photon got absorbed along the way.
  bool heuristic_steps(Ctx& c, int j, bool component_search) {
    Recorder r = rec(c);
    // Step 1: collapse weight-2 emitter-only stabilizers while they exist.
    while (true) {
      c.t.rref();
      clean_pure_columns(c.t);
      c.t.back_substitute();
      int found = -1;
      for (int k = 0; k < c.t.num_rows(); ++k)
        if (c.t.row_weight(k) == 2 && c.t.leading_column(k) > n_p_ && c.t.emitter_weight(k) == 2) {
          found = k;
          break;
        }
      if (found < 0) break;
      auto pair = c.t.emitter_support(found);
      apply_pair_rule(r, pair[0], pair[1]);
      c.t.rref();
      clean_pure_columns(c.t);
      auto row = free_absorption_row(c.t, j, opts_.exhaust_free_pa);
      if (row) {
        auto emitters = c.t.emitter_support(*row);
        fan_and_absorb(r, *row, emitters[0], j);
        c.next_photon--;
        snapshot(c);
        return true;
      }
    }

    if (!component_search) return false;

    // Step 3: hunt for a local-gate + CNOT combination that splits the
    // remaining graph. Phases are skipped during the scan and recomputed on
    // the committed choice.
    int row = pick_min_weight_row(c, j);
    auto emitters = c.t.emitter_support(row);
    bool truncate = (n_p_ + n_e_ >= 30);
    std::size_t limit = truncate ? (emitters.size() + 2) / 3 : emitters.size();
    if (limit < 2 && emitters.size() >= 2) limit = 2;
    std::vector<int> cand(emitters.begin(), emitters.begin() + std::min(emitters.size(), limit));

    auto cols = live_columns(c);
    std::vector<int> colmap(c.t.num_qubits() + 1, -1);
    for (std::size_t i = 0; i < cols.size(); ++i) colmap[cols[i]] = int(i);
    BitMat base = live_bits(c.t, cols);
    int base_comps = adjacency_components(bitmat_adjacency(base));
    int num_locals = opts_.h1_local_gate_set == OptimizerOptions::LocalGates::Reduced4 ? 4 : 6;
    // Local-gate index order: I, H, P, PH, HP, HPH; the reduced set keeps the
    // first four.
    static const int kGateIds[6] = {0, 1, 2, 4, 3, 5};

    for (std::size_t ai = 0; ai + 1 < cand.size(); ++ai)
      for (std::size_t bi = ai + 1; bi < cand.size(); ++bi)
        for (int ga = 0; ga < num_locals; ++ga)
          for (int gb = 0; gb < num_locals; ++gb)
            for (int dir = 0; dir < 2; ++dir) {
              BitMat probe = base;
              int ca = colmap[cand[ai]], cb = colmap[cand[bi]];
              bitmat_local(probe, ca, kGateIds[ga]);
              bitmat_local(probe, cb, kGateIds[gb]);
              bitmat_cnot(probe, dir == 0 ? ca : cb, dir == 0 ? cb : ca);
              int comps = adjacency_components(bitmat_adjacency(std::move(probe)));
              if (comps > base_comps) {
                commit_local_pair(c, cand[ai], cand[bi], kGateIds[ga], kGateIds[gb], dir);
                c.t.rref();
                clean_pure_columns(c.t);
                auto fr = free_absorption_row(c.t, j, opts_.exhaust_free_pa);
                if (fr) {
                  Recorder r2 = rec(c);
                  auto es = c.t.emitter_support(*fr);
                  fan_and_absorb(r2, *fr, es[0], j);
                  c.next_photon--;
                  snapshot(c);
                  return true;
                }
                return false;
              }
            }
    return false;
  }

  void commit_local_pair(Ctx& c, int a, int b, int ga, int gb, int dir) {
    Recorder r = rec(c);
    auto emit_local = [&](int q, int id) {
      switch (id) {
        case 0: break;
        case 1: r.gate(GateKind::H, q); break;
        case 2: r.gate(GateKind::P, q); break;
        case 3: r.gate(GateKind::P, q); r.gate(GateKind::H, q); break;   // HP
        case 4: r.gate(GateKind::H, q); r.gate(GateKind::P, q); break;   // PH
        case 5: r.gate(GateKind::H, q); r.gate(GateKind::P, q); r.gate(GateKind::H, q); break;
      }
    };
    emit_local(a, ga);
    emit_local(b, gb);
    r.gate(GateKind::CNOT, dir == 0 ? a : b, dir == 0 ? b : a);
    snapshot(c);
  }

  // Step 4 of the first heuristic: try every candidate absorber, count the
  // edges left after its CNOT fan, keep the sparsest.
  void h1_forced(Ctx& c, int j) {
    if (heuristic_steps(c, j, true)) return;
    int row = pick_min_weight_row(c, j);
    auto emitters = c.t.emitter_support(row);
    if (emitters.empty()) throw std::logic_error("h1_forced: photonic row without emitters");
    bool truncate = (n_p_ + n_e_ >= 30);
    std::size_t limit = truncate ? (emitters.size() + 2) / 3 : emitters.size();
    if (limit < 1) limit = 1;
    std::vector<int> cand(emitters.begin(), emitters.begin() + std::min(emitters.size(), limit));

    int best_e = cand[0];
    if (cand.size() > 1) {
      int best_edges = std::numeric_limits<int>::max();
      for (int e : cand) {
        Tableau probe = c.t;
        Recorder pr{&probe, nullptr, nullptr};
        rotate_to_z(pr, row, j);
        for (int e2 : emitters) rotate_to_z(pr, row, e2);
        for (int e2 : emitters)
          if (e2 != e) pr.gate(GateKind::CNOT, e2, e);
        auto cols = live_columns_of(probe, c.next_photon);
        int edges = adjacency_edges(bitmat_adjacency(live_bits(probe, cols)));
        if (edges < best_edges) {
          best_edges = edges;
          best_e = e;
        }
      }
    }
    absorb_forced(c, row, best_e, j);
  }

  std::vector<int> live_columns_of(const Tableau& t, int next_photon) const {
    std::vector<int> cols;
    for (int q = 1; q <= next_photon; ++q) cols.push_back(q);
    for (int q = n_p_ + 1; q <= n_p_ + n_e_; ++q) cols.push_back(q);
    return cols;
  }

  // Second heuristic: recursive lookahead over candidate absorbers.
  void h2_forced(Ctx& c, int j) {
    bool component_search = n_p_ <= 20;
    if (heuristic_steps(c, j, component_search)) return;
    int row = pick_min_weight_row(c, j);
    auto emitters = c.t.emitter_support(row);
    if (emitters.empty()) throw std::logic_error("h2_forced: photonic row without emitters");
    std::size_t limit = opts_.emitter_cutoff ? std::size_t(*opts_.emitter_cutoff) : emitters.size();
    std::vector<int> cand(emitters.begin(), emitters.begin() + std::min(emitters.size(), limit));
    int fc = opts_.future_cutoff.value_or(2);
    if (cand.size() == 1 || fc == 0) {
      absorb_forced(c, row, cand[0], j);
      return;
    }
    int best_e = cand[0], best_cost = std::numeric_limits<int>::max();
    for (int e : cand) {
      Ctx probe = clone_for_probe(c);
      Recorder pr = rec(probe);
      fan_and_absorb(pr, row, e, j);
      probe.next_photon--;
      lookahead(probe, fc);
      if (probe.cnots < best_cost) {
        best_cost = probe.cnots;
        best_e = e;
      }
    }
    absorb_forced(c, row, best_e, j);
  }

  Ctx clone_for_probe(const Ctx& c) {
    Ctx probe;
    probe.t = c.t;
    probe.record = false;
    probe.cnots = c.cnots;
    probe.next_photon = c.next_photon;
    probe.lc_left = 0;
    return probe;
  }

  // Advances a probe by up to `budget` more photon absorptions, resolving
  // nested ambiguous choices greedily (or recursively while less than half of
  // the photons have been consumed and recursion is enabled).
  void lookahead(Ctx& c, int budget) {
    bool component_search = n_p_ <= 20;
    while (budget > 0 && c.next_photon >= 1) {
      int absorbed = 0;
      Status st = advance(c, opts_.exhaust_free_pa, opts_.backsub_global, budget, &absorbed);
      budget -= absorbed;
      if (st == Status::Paused) return;
      if (st == Status::Done) break;
      if (budget <= 0) return;
      int j = c.next_photon;
      if (heuristic_steps(c, j, component_search)) {
        budget--;
        continue;
      }
      int row = pick_min_weight_row(c, j);
      auto emitters = c.t.emitter_support(row);
      int consumed = n_p_ - c.next_photon;
      int chosen = emitters[0];
      if (opts_.recurse_further && consumed < n_p_ / 2 && budget > 1 && emitters.size() > 1) {
        std::size_t limit = opts_.emitter_cutoff ? std::size_t(*opts_.emitter_cutoff) : emitters.size();
        std::vector<int> cand(emitters.begin(), emitters.begin() + std::min(emitters.size(), limit));
        int best_cost = std::numeric_limits<int>::max();
        for (int e : cand) {
          Ctx probe = clone_for_probe(c);
          Recorder pr = rec(probe);
          fan_and_absorb(pr, row, e, j);
          probe.next_photon--;
          lookahead(probe, budget - 1);
          if (probe.cnots < best_cost) {
            best_cost = probe.cnots;
            chosen = e;
          }
        }
      }
      Recorder r = rec(c);
      fan_and_absorb(r, row, chosen, j);
      c.next_photon--;
      budget--;
    }
    if (c.next_photon == 0) {
      Recorder r = rec(c);
      int guard = 4 * (c.t.num_qubits() + 1) * (c.t.num_qubits() + 1);
      while (disentangle_pass(r, opts_.backsub_global))
        if (--guard < 0) throw std::logic_error("lookahead: disentanglement stuck");
    }
  }

  SynthesisResult run(Optimizer which) {
    bool exhaust = which == Optimizer::Naive ? false : opts_.exhaust_free_pa;
    bool backsub = which == Optimizer::Naive ? false : opts_.backsub_global;
    Ctx c = make_root();
    snapshot(c);
    while (true) {
      Status st = advance(c, exhaust, backsub);
      if (st == Status::Done) break;
      int j = c.next_photon;
      switch (which) {
        case Optimizer::Naive: naive_forced(c, j); break;
        case Optimizer::H1: h1_forced(c, j); break;
        case Optimizer::H2: h2_forced(c, j); break;
        case Optimizer::Brute: throw std::logic_error("brute handled separately");
      }
    }
    finish(c, backsub && which != Optimizer::Naive);
    return package(std::move(c));
  }

  SynthesisResult run_brute() {
    Ctx root = make_root();
    snapshot(root);
    std::optional<Ctx> best;
    std::vector<Ctx> frontier;
    std::size_t nodes = 0;

    auto settle = [&](Ctx&& c) {
      // Advance to the next forced point or completion.
      Status st = advance(c, opts_.exhaust_free_pa, opts_.backsub_global);
      if (++nodes > opts_.node_budget) throw BudgetExceeded("brute_force_synthesize: node budget exceeded");
      if (st == Status::Done) {
        finish(c, opts_.backsub_global);
        if (!best || c.cnots < best->cnots) best = std::move(c);
      } else {
        if (!best || c.cnots < best->cnots) frontier.push_back(std::move(c));
      }
    };

    settle(std::move(root));
    while (!frontier.empty()) {
      std::vector<Ctx> level = std::move(frontier);
      frontier.clear();
      std::stable_sort(level.begin(), level.end(),
                       [](const Ctx& a, const Ctx& b) { return a.cnots < b.cnots; });
      if (opts_.prune_per_level && int(level.size()) > *opts_.prune_per_level)
        level.resize(*opts_.prune_per_level);
      for (Ctx& s : level) {
        if (best && s.cnots >= best->cnots) continue;
        expand(s, settle);
      }
    }
    if (!best) throw std::logic_error("brute force: no completed branch");
    return package(std::move(*best));
  }

  template <typename Settle>
  void expand(Ctx& s, Settle&& settle) {
    int j = s.next_photon;
    auto rows = s.t.rows_leading_at(j);

    // (A) every emitter of every photonic row
    for (int row : rows)
      for (int e : s.t.emitter_support(row)) {
        Ctx c = s;
        absorb_forced(c, row, e, j);
        settle(std::move(c));
      }
    // (B) the product of the two photonic rows
    if (rows.size() == 2) {
      Ctx c0 = s;
      c0.t.rowsum(rows[0], rows[1]);
      for (int e : c0.t.emitter_support(rows[0])) {
        Ctx c = c0;
        absorb_forced(c, rows[0], e, j);
        settle(std::move(c));
      }
    }
    // (C) emitter-only stabilizers multiplied onto photonic rows
    std::vector<int> emitter_rows;
    for (int r = 0; r < s.t.num_rows(); ++r)
      if (s.t.leading_column(r) > n_p_ && s.t.row_weight(r) >= 2) emitter_rows.push_back(r);
    for (int row : rows)
      for (int er : emitter_rows) {
        Ctx c0 = s;
        c0.t.rowsum(row, er);
        for (int e : c0.t.emitter_support(row)) {
          Ctx c = c0;
          absorb_forced(c, row, e, j);
          settle(std::move(c));
        }
      }
    // (D) local complementations about live vertices
    if (s.lc_left > 0) {
      Graph full = extract_full_graph(s.t);
      for (int v = 1; v <= n_p_ + n_e_; ++v) {
        if (v > s.next_photon && v <= n_p_) continue;  // absorbed photon
        if (full.degree(v) < 2) continue;
        Ctx c = s;
        c.lc_left--;
        apply_lc(c, v);
        c.t.rref();
        clean_pure_columns(c.t);
        auto fr = free_absorption_row(c.t, j, opts_.exhaust_free_pa);
        if (fr) {
          Recorder r = rec(c);
          auto es = c.t.emitter_support(*fr);
          fan_and_absorb(r, *fr, es[0], j);
          c.next_photon--;
          snapshot(c);
          settle(std::move(c));
        } else {
          expand(c, settle);
        }
      }
    }
  }

  // Local complementation about v as circuit gates: first strip the local
  // corrections (canonicalize to a graph state), then the LC gate itself.
  // Afterwards the rows are refreshed to the canonical tableau of G*v.
  void apply_lc(Ctx& c, int v) {
    auto ex = to_graph(c.t);
    Recorder r = rec(c);
    for (const auto& g : ex.local_ops) r.gate(g.kind, g.q, g.q2);
    r.gate(GateKind::H, v);
    r.gate(GateKind::P, v);
    r.gate(GateKind::H, v);
    for (int w : ex.graph.neighbors(v)) r.gate(GateKind::Pdag, w);
    Tableau fresh = Tableau::from_graph(local_complement(ex.graph, v));
    fresh.set_num_photons(n_p_);
    c.t = std::move(fresh);
  }

  SynthesisResult package(Ctx&& c) {
    Circuit rev;
    rev.n_photons = n_p_;
    rev.n_emitters = n_e_;
    rev.time_reversed = true;
    rev.ordering = ordering_;
    rev.ops = std::move(c.ops);
    Circuit fwd = reverse_circuit(rev);
    if (fwd.emitter_cnots() != c.cnots)
      throw std::logic_error("synthesize: CNOT bookkeeping mismatch");
    if (!verify_circuit(fwd, target_, ordering_, opts_.verify_seeds))
      throw std::logic_error("synthesize: verification failed");
    SynthesisResult res;
    res.circuit = std::move(fwd);
    res.emitter_cnots = c.cnots;
    res.num_emitters = n_e_;
    res.trace = std::move(c.trace);
    return res;
  }

 private:
  Graph target_;
  Graph gperm_{1};
  std::vector<int> ordering_;
  OptimizerOptions opts_;
  int n_p_ = 0, n_e_ = 0;
};

inline SynthesisResult run_one(const Graph& g, const std::vector<int>& ordering,
                               const OptimizerOptions& opts, Optimizer which) {
  Engine e(g, ordering, opts);
  return which == Optimizer::Brute ? e.run_brute() : e.run(which);
}

inline SynthesisResult run_with_variants(const Graph& g, const std::vector<int>& ordering,
                                         const OptimizerOptions& opts, Optimizer which) {
  if (!opts.variant_sweep || which == Optimizer::Naive || which == Optimizer::Brute)
    return run_one(g, ordering, opts, which);
  static const std::pair<bool, bool> kVariants[3] = {{false, false}, {true, false}, {false, true}};
  std::optional<SynthesisResult> best;
  for (auto [bs, ex] : kVariants) {
    OptimizerOptions o = opts;
    o.backsub_global = bs;
    o.exhaust_free_pa = ex;
    SynthesisResult r = run_one(g, ordering, o, which);
    if (!best || r.emitter_cnots < best->emitter_cnots) best = std::move(r);
  }
  return std::move(*best);
}

}  // namespace synth_detail

// The four circuit generators. `ordering` lists target vertices in emission
// order (empty = natural order); outputs are verified forward circuits.
inline SynthesisResult naive_synthesize(const Graph& g, const std::vector<int>& ordering = {},
                                        const OptimizerOptions& opts = {}) {
  return synth_detail::run_with_variants(g, ordering, opts, Optimizer::Naive);
}

inline SynthesisResult heuristics1_synthesize(const Graph& g, const std::vector<int>& ordering = {},
                                              const OptimizerOptions& opts = {}) {
  return synth_detail::run_with_variants(g, ordering, opts, Optimizer::H1);
}

inline SynthesisResult heuristics2_synthesize(const Graph& g, const std::vector<int>& ordering = {},
                                              const OptimizerOptions& opts = {}) {
  return synth_detail::run_with_variants(g, ordering, opts, Optimizer::H2);
}

inline SynthesisResult brute_force_synthesize(const Graph& g, const std::vector<int>& ordering = {},
                                              const OptimizerOptions& opts = {}) {
  return synth_detail::run_with_variants(g, ordering, opts, Optimizer::Brute);
}

inline SynthesisResult synthesize(Optimizer which, const Graph& g,
                                  const std::vector<int>& ordering = {},
                                  const OptimizerOptions& opts = {}) {
  return synth_detail::run_with_variants(g, ordering, opts, which);
}

// Disconnected targets are synthesized per connected component; the merged
// circuit runs the components one after another on a shared emitter register
// (every component leaves the emitters in |0>).
inline SynthesisResult synthesize_any(Optimizer which, const Graph& g,
                                      const std::vector<int>& ordering = {},
                                      const OptimizerOptions& opts = {}) {
  auto comps = connected_components(g);
  if (comps.size() == 1) return synthesize(which, g, ordering, opts);

  int n_p = g.order();
  std::vector<int> ord = ordering;
  if (ord.empty()) {
    ord.resize(n_p);
    for (int i = 0; i < n_p; ++i) ord[i] = i + 1;
  }
  std::vector<int> pos_in_ord(n_p + 1, 0);
  for (int k = 0; k < n_p; ++k) pos_in_ord[ord[k]] = k + 1;

  SynthesisResult merged;
  merged.circuit.n_photons = n_p;
  merged.circuit.time_reversed = false;
  merged.circuit.ordering = ord;
  int n_e = 0;

  struct Piece {
    SynthesisResult res;
    std::vector<int> emit_global;  // original label of the k-th emitted photon
  };
  std::vector<Piece> pieces;
  for (const auto& comp : comps) {
    std::vector<int> members = comp.members();  // ascending original labels
    std::vector<int> local_of(n_p + 1, 0);
    for (std::size_t i = 0; i < members.size(); ++i) local_of[members[i]] = int(i) + 1;
    Piece piece;
    for (int v : ord)
      if (local_of[v] > 0) piece.emit_global.push_back(v);
    std::vector<int> local_ordering;
    for (int v : piece.emit_global) local_ordering.push_back(local_of[v]);
    piece.res = synthesize(which, g.induced(members), local_ordering, opts);
    n_e = std::max(n_e, piece.res.num_emitters);
    pieces.push_back(std::move(piece));
  }
  merged.circuit.n_emitters = n_e;
  merged.num_emitters = n_e;
  for (const auto& piece : pieces) {
    int np_c = int(piece.emit_global.size());
    auto remap = [&](int q) {
      if (q <= np_c) return pos_in_ord[piece.emit_global[q - 1]];
      return n_p + (q - np_c);
    };
    for (CircuitOp op : piece.res.circuit.ops) {
      op.q = remap(op.q);
      if (op.q2) op.q2 = remap(op.q2);
      for (auto& cp : op.cond) cp.q = remap(cp.q);
      merged.circuit.ops.push_back(std::move(op));
    }
    merged.emitter_cnots += piece.res.emitter_cnots;
  }
  if (merged.emitter_cnots != merged.circuit.emitter_cnots())
    throw std::logic_error("synthesize_any: CNOT bookkeeping mismatch");
  if (!verify_circuit(merged.circuit, g, ord, opts.verify_seeds))
    throw std::logic_error("synthesize_any: merged circuit failed verification");
  return merged;
}

}  // namespace gsf

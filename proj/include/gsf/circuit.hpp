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

#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsf/tableau.hpp"

namespace gsf {

enum class OpKind { H, P, Pdag, X, Y, Z, CNOT, TRM, MZ, ResetPlus };

// Conditional Pauli correction attached to a measurement (applied on -1).
struct CondPauli {
  OpKind g;  // X, Y or Z
  int q;
  bool operator==(const CondPauli& o) const { return g == o.g && q == o.q; }
};

// One circuit operation. `q` is the qubit (CNOT control, measured qubit, TRM
// emitter); `q2` is the CNOT target or the TRM photon.
struct CircuitOp {
  OpKind g;
  int q = 0;
  int q2 = 0;
  std::vector<CondPauli> cond;
  bool operator==(const CircuitOp& o) const {
    return g == o.g && q == o.q && q2 == o.q2 && cond == o.cond;
  }
};

// Gate list over photon qubits 1..n_photons (in emission order) and emitter
// qubits n_photons+1..n_photons+n_emitters. The time-reversed form uses TRM
// composite ops; the forward form uses MZ/ResetPlus instead.
struct Circuit {
  int n_photons = 0;
  int n_emitters = 0;
  bool time_reversed = true;
  std::vector<int> ordering;  // target-graph vertex emitted k-th
  std::vector<CircuitOp> ops;

  int num_qubits() const { return n_photons + n_emitters; }
  bool is_photon(int q) const { return q >= 1 && q <= n_photons; }

  int emitter_cnots() const {
    int c = 0;
    for (const auto& op : ops)
      if (op.g == OpKind::CNOT && !is_photon(op.q) && !is_photon(op.q2)) ++c;
    return c;
  }

  bool operator==(const Circuit& o) const {
    return n_photons == o.n_photons && n_emitters == o.n_emitters &&
           time_reversed == o.time_reversed && ordering == o.ordering && ops == o.ops;
  }
};

inline const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::H: return "H";
    case OpKind::P: return "P";
    case OpKind::Pdag: return "Pdag";
    case OpKind::X: return "X";
    case OpKind::Y: return "Y";
    case OpKind::Z: return "Z";
    case OpKind::CNOT: return "CNOT";
    case OpKind::TRM: return "TRM";
    case OpKind::MZ: return "MZ";
    case OpKind::ResetPlus: return "ResetPlus";
  }
  return "?";
}

inline OpKind op_from_name(const std::string& s) {
  for (OpKind k : {OpKind::H, OpKind::P, OpKind::Pdag, OpKind::X, OpKind::Y, OpKind::Z,
                   OpKind::CNOT, OpKind::TRM, OpKind::MZ, OpKind::ResetPlus})
    if (s == op_name(k)) return k;
  throw std::invalid_argument("unknown op name: " + s);
}

// Photons are emitted by exactly one emitter-controlled CNOT, never act as a
// control, never meet another photon in a two-qubit gate, and measurements
// and resets touch emitters only.
inline bool circuit_well_formed(const Circuit& c) {
  if (c.time_reversed) return false;  // forward circuits only
  std::vector<int> photon_cnots(c.n_photons + 1, 0);
  for (const auto& op : c.ops) {
    switch (op.g) {
      case OpKind::CNOT: {
        bool cp = c.is_photon(op.q), tp = c.is_photon(op.q2);
        if (cp) return false;  // photons never control
        if (tp) photon_cnots[op.q2]++;
        break;
      }
      case OpKind::MZ:
      case OpKind::ResetPlus:
        if (c.is_photon(op.q)) return false;
        break;
      case OpKind::TRM:
        return false;
      default:
        break;
    }
  }
  for (int p = 1; p <= c.n_photons; ++p)
    if (photon_cnots[p] != 1) return false;
  return true;
}

// Flips the direction of a circuit: order reversed, every gate inverted.
// A time-reversed TRM becomes a measurement with its classical corrections
// and an emitter re-initialization; the reverse mapping restores the TRM.
inline Circuit reverse_circuit(const Circuit& c) {
  Circuit out;
  out.n_photons = c.n_photons;
  out.n_emitters = c.n_emitters;
  out.ordering = c.ordering;
  out.time_reversed = !c.time_reversed;

  if (c.time_reversed) {
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
      const CircuitOp& op = *it;
      switch (op.g) {
        case OpKind::TRM: {
          // Reversed [H(e); CNOT(e, j)] acting on |0> is implemented as a
          // computational-basis measurement with an X correction on the
          // photon, then re-initialization of the emitter in |0>.
          CircuitOp mz{OpKind::MZ, op.q, 0, {CondPauli{OpKind::X, op.q2}}};
          out.ops.push_back(std::move(mz));
          out.ops.push_back(CircuitOp{OpKind::ResetPlus, op.q, 0, {}});
          break;
        }
        case OpKind::P:
          out.ops.push_back(CircuitOp{OpKind::Pdag, op.q, 0, {}});
          break;
        case OpKind::Pdag:
          out.ops.push_back(CircuitOp{OpKind::P, op.q, 0, {}});
          break;
        case OpKind::MZ:
        case OpKind::ResetPlus:
          throw std::invalid_argument("reverse_circuit: measurement inside a time-reversed circuit");
        default:
          out.ops.push_back(op);
          break;
      }
    }
  } else {
    // Forward to time-reversed: MZ + ResetPlus pairs collapse back to TRMs.
    for (auto it = c.ops.rbegin(); it != c.ops.rend(); ++it) {
      const CircuitOp& op = *it;
      switch (op.g) {
        case OpKind::ResetPlus: {
          ++it;
          if (it == c.ops.rend() || it->g != OpKind::MZ || it->q != op.q)
            throw std::invalid_argument("reverse_circuit: ResetPlus without its measurement");
          int photon = 0;
          for (const auto& cp : it->cond)
            if (cp.q != it->q && cp.g == OpKind::X) photon = cp.q;
          if (photon == 0) throw std::invalid_argument("reverse_circuit: measurement without photon correction");
          out.ops.push_back(CircuitOp{OpKind::TRM, op.q, photon, {}});
          break;
        }
        case OpKind::MZ:
          throw std::invalid_argument("reverse_circuit: measurement without re-initialization");
        case OpKind::P:
          out.ops.push_back(CircuitOp{OpKind::Pdag, op.q, 0, {}});
          break;
        case OpKind::Pdag:
          out.ops.push_back(CircuitOp{OpKind::P, op.q, 0, {}});
          break;
        default:
          out.ops.push_back(op);
          break;
      }
    }
  }
  return out;
}

inline nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : c.ops) {
    nlohmann::json j;
    j["g"] = op.g == OpKind::TRM ? "TRM" : op_name(op.g);
    if (op.g == OpKind::CNOT || op.g == OpKind::TRM)
      j["q"] = {op.q, op.q2};
    else
      j["q"] = {op.q};
    nlohmann::json cond = nlohmann::json::array();
    for (const auto& cp : op.cond) cond.push_back({{"g", op_name(cp.g)}, {"q", {cp.q}}});
    j["cond"] = cond;
    ops.push_back(std::move(j));
  }
  return nlohmann::json{{"n_photons", c.n_photons},
                        {"n_emitters", c.n_emitters},
                        {"ordering", c.ordering},
                        {"ops", ops},
                        {"emitter_cnots", c.emitter_cnots()}};
}

inline Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit c;
  c.n_photons = j.at("n_photons").get<int>();
  c.n_emitters = j.at("n_emitters").get<int>();
  c.ordering = j.at("ordering").get<std::vector<int>>();
  c.time_reversed = false;
  for (const auto& je : j.at("ops")) {
    CircuitOp op;
    op.g = op_from_name(je.at("g").get<std::string>());
    auto qs = je.at("q").get<std::vector<int>>();
    op.q = qs.at(0);
    if (qs.size() > 1) op.q2 = qs[1];
    if (je.contains("cond"))
      for (const auto& jc : je.at("cond"))
        op.cond.push_back(CondPauli{op_from_name(jc.at("g").get<std::string>()),
                                    jc.at("q").get<std::vector<int>>().at(0)});
    if (op.g == OpKind::TRM) c.time_reversed = true;
    c.ops.push_back(std::move(op));
  }
  return c;
}

// Plain-text rendering, one column per operation.
inline std::string circuit_pretty(const Circuit& c) {
  int n = c.num_qubits();
  std::vector<std::string> lanes(n);
  auto pad = [&](std::size_t w) {
    for (auto& l : lanes) l.resize(w, '-');
  };
  std::size_t col = 0;
  for (const auto& op : c.ops) {
    std::string label;
    switch (op.g) {
      case OpKind::Pdag: label = "P'"; break;
      case OpKind::MZ: label = "M"; break;
      case OpKind::ResetPlus: label = "R+"; break;
      case OpKind::TRM: label = "T"; break;
      default: label = op_name(op.g); break;
    }
    std::size_t w = std::max<std::size_t>(label.size(), 1) + 1;
    pad(col);
    if (op.g == OpKind::CNOT || op.g == OpKind::TRM) {
      lanes[op.q - 1] += "o";
      lanes[op.q2 - 1] += "+";
    } else {
      lanes[op.q - 1] += label;
    }
    col += w;
    pad(col);
  }
  std::ostringstream out;
  for (int q = 1; q <= n; ++q)
    out << (c.is_photon(q) ? "ph" : "em") << q << (q < 10 ? " " : "") << ": " << lanes[q - 1]
        << "\n";
  return out.str();
}

}  // namespace gsf

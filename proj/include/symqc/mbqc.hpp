// Copyright 2026 The symqc Authors
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

#include "symqc/mps.hpp"

namespace symqc {

/// Byproduct discipline of the coupled-wire compiler. Measuring a wire site
/// in the basis {(|0⟩ + (-1)^s e^{-iα}|1⟩)/√2} teleports the logical state one
/// site down the chain and applies H·diag(1, e^{iα}) with byproduct X^s.
/// Mirrored in data/mbqc_byproduct_rules.txt.
inline constexpr const char* kByproductRules =
    "step    angle' = (-1)^x angle ; x' = s xor z ; z' = x\n"
    "junction z_i' = z_i xor x_j ; z_j' = z_j xor x_i\n";

struct PatternStep {
  int site = 0;
  double angle = 0.0;           // measured angle is (-1)^{parity(sign_deps)} * angle
  std::vector<int> sign_deps;   // indices of earlier steps
};

struct MeasurementPattern {
  int num_wires = 0;
  int num_sites = 0;
  std::vector<std::pair<int, int>> edges;  // resource CZ graph
  std::vector<int> input_sites;            // chain heads, one per wire
  std::vector<int> output_sites;
  std::vector<PatternStep> steps;
  std::vector<std::vector<int>> x_deps;    // final frame per wire, outcome parity sets
  std::vector<std::vector<int>> z_deps;
};

/// Lowers a {H, RZ, RX, CZ} circuit to a single-round adaptive measurement
/// pattern on a coupled-wire cluster resource. All entangling structure ends
/// up in the resource graph; the rotations become tilted measurement angles.
inline MeasurementPattern compile(const CircuitIR& circuit) {
  if (circuit.num_wires < 1 || circuit.num_wires > 4)
    throw std::invalid_argument("compile: need between 1 and 4 wires");
  MeasurementPattern pat;
  pat.num_wires = circuit.num_wires;
  std::vector<int> cur(circuit.num_wires);
  std::vector<std::vector<int>> xset(circuit.num_wires), zset(circuit.num_wires);
  for (int w = 0; w < circuit.num_wires; ++w) {
    cur[w] = pat.num_sites++;
    pat.input_sites.push_back(cur[w]);
  }
  auto sym_diff = [](std::vector<int> a, const std::vector<int>& b) {
    for (int e : b) {
      auto it = std::find(a.begin(), a.end(), e);
      if (it == a.end())
        a.push_back(e);
      else
        a.erase(it);
    }
    std::sort(a.begin(), a.end());
    return a;
  };
  auto add_step = [&](int w, double angle) {
    int next = pat.num_sites++;
    pat.edges.emplace_back(cur[w], next);
    pat.steps.push_back({cur[w], angle, xset[w]});
    int idx = static_cast<int>(pat.steps.size()) - 1;
    std::vector<int> new_x = sym_diff(zset[w], {idx});
    zset[w] = xset[w];
    xset[w] = std::move(new_x);
    cur[w] = next;
  };
  auto lower_rz = [&](int w, double theta) {
    // diag(1, e^{-i theta}) realizes RZ(theta) up to global phase
    add_step(w, -theta);
    add_step(w, 0.0);
  };
  auto lower_rx = [&](int w, double theta) {
    add_step(w, 0.0);
    add_step(w, -theta);
    add_step(w, 0.0);
    add_step(w, 0.0);
  };
  auto junction = [&](int a, int b) {
    pat.edges.emplace_back(cur[a], cur[b]);
    std::vector<int> za = sym_diff(zset[a], xset[b]);
    zset[b] = sym_diff(zset[b], xset[a]);
    zset[a] = std::move(za);
  };
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::H:
        add_step(g.wires[0], 0.0);
        break;
      case GateKind::RZ:
        lower_rz(g.wires[0], g.angle);
        break;
      case GateKind::RX:
        lower_rx(g.wires[0], g.angle);
        break;
      case GateKind::S:
        lower_rz(g.wires[0], -M_PI / 2);
        break;
      case GateKind::T:
        lower_rz(g.wires[0], -M_PI / 4);
        break;
      case GateKind::Z:
        lower_rz(g.wires[0], M_PI);
        break;
      case GateKind::X:
        lower_rx(g.wires[0], M_PI);
        break;
      case GateKind::Y:
        lower_rz(g.wires[0], M_PI);
        lower_rx(g.wires[0], M_PI);
        break;
      case GateKind::CZ:
        junction(g.wires[0], g.wires[1]);
        break;
      case GateKind::CNOT:
        add_step(g.wires[1], 0.0);
        junction(g.wires[0], g.wires[1]);
        add_step(g.wires[1], 0.0);
        break;
      default:
        throw std::invalid_argument("compile: unsupported gate kind");
    }
  }
  for (int w = 0; w < circuit.num_wires; ++w) {
    pat.output_sites.push_back(cur[w]);
    pat.x_deps.push_back(xset[w]);
    pat.z_deps.push_back(zset[w]);
  }
  return pat;
}

struct ExecuteResult {
  DenseState output;
  std::vector<ByproductFrame> frames;  // one per wire
  std::vector<int> outcomes;           // step order
  double probability = 1.0;
};

/// Runs a pattern on the graph resource, materializing sites lazily: a site
/// enters the dense register (as |+⟩ with its CZ edges to live neighbors)
/// just before a neighbor needs it, and leaves when measured.
inline ExecuteResult execute(const MeasurementPattern& pat, const DenseState& input,
                             const std::vector<int>* forced_outcomes = nullptr,
                             std::mt19937_64* rng = nullptr) {
  if (input.num_sites() != pat.num_wires)
    throw std::invalid_argument("execute: input must have one qubit per wire");
  for (int d : input.site_dims)
    if (d != 2) throw std::invalid_argument("execute: input sites must be qubits");
  if (forced_outcomes && forced_outcomes->size() != pat.steps.size())
    throw std::invalid_argument("execute: forced outcome count mismatch");

  std::vector<std::vector<int>> adj(pat.num_sites);
  for (auto [a, b] : pat.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  enum class SiteState { Unborn, Active, Consumed };
  std::vector<SiteState> state(pat.num_sites, SiteState::Unborn);
  std::vector<int> order;  // active sites in register order

  DenseState reg = input;
  for (int w = 0; w < pat.num_wires; ++w) {
    state[pat.input_sites[w]] = SiteState::Active;
    order.push_back(pat.input_sites[w]);
  }
  auto position = [&](int site) {
    return static_cast<int>(std::find(order.begin(), order.end(), site) - order.begin());
  };
  auto materialize = [&](int site) {
    if (reg.num_sites() >= 20) throw std::invalid_argument("execute: resource too large");
    reg = reg.tensor(DenseState::plus_qubits(1));
    order.push_back(site);
    state[site] = SiteState::Active;
    for (int nb : adj[site])
      if (state[nb] == SiteState::Active)
        apply_on_sites(reg, gates::CZ(), {position(nb), position(site)});
  };
  // junction edges between two input heads are live from the start
  for (auto [a, b] : pat.edges)
    if (state[a] == SiteState::Active && state[b] == SiteState::Active)
      apply_on_sites(reg, gates::CZ(), {position(a), position(b)});

  ExecuteResult res;
  for (size_t k = 0; k < pat.steps.size(); ++k) {
    const auto& st = pat.steps[k];
    for (int nb : adj[st.site])
      if (state[nb] == SiteState::Unborn) materialize(nb);
    int sign = 0;
    for (int d : st.sign_deps) sign ^= res.outcomes.at(d);
    double angle = sign ? -st.angle : st.angle;
    Mat basis(2, 2);
    const double h = 1.0 / std::sqrt(2.0);
    basis << h, h, h * std::polar(1.0, -angle), -h * std::polar(1.0, -angle);
    std::optional<int> forced;
    if (forced_outcomes) forced = (*forced_outcomes)[k];
    auto mr = measure(reg, position(st.site), basis, forced, rng);
    reg = mr.post;
    res.outcomes.push_back(mr.outcome);
    res.probability *= mr.probability;
    order.erase(std::find(order.begin(), order.end(), st.site));
    state[st.site] = SiteState::Consumed;
  }

  // reorder the surviving sites into wire order
  if (reg.num_sites() != pat.num_wires)
    throw std::logic_error("execute: leftover non-output sites");
  std::vector<int> pos(pat.num_wires);
  for (int w = 0; w < pat.num_wires; ++w) pos[w] = position(pat.output_sites[w]);
  const int n = pat.num_wires;
  Vec out = Vec::Zero(reg.amps.size());
  for (Eigen::Index j = 0; j < reg.amps.size(); ++j) {
    Eigen::Index i = 0;
    for (int w = 0; w < n; ++w) {
      int bit = (j >> (n - 1 - pos[w])) & 1;
      i |= Eigen::Index(bit) << (n - 1 - w);
    }
    out(i) = reg.amps(j);
  }
  res.output = DenseState(std::vector<int>(n, 2), std::move(out));

  for (int w = 0; w < pat.num_wires; ++w) {
    ByproductFrame f;
    for (int d : pat.x_deps[w]) f.x_bit ^= res.outcomes.at(d);
    for (int d : pat.z_deps[w]) f.z_bit ^= res.outcomes.at(d);
    res.frames.push_back(f);
  }
  return res;
}

inline DenseState correct_frames(const DenseState& raw, const std::vector<ByproductFrame>& frames) {
  DenseState out = raw;
  for (size_t w = 0; w < frames.size(); ++w) {
    if (frames[w].x_bit) apply_on_sites(out, gates::X(), {static_cast<int>(w)});
    if (frames[w].z_bit) apply_on_sites(out, gates::Z(), {static_cast<int>(w)});
  }
  return out;
}

struct CompareReport {
  double min_fidelity = 1.0;
  double mean_fidelity = 1.0;
};

/// Samples outcome branches of the compiled pattern on random inputs and
/// compares the frame-corrected outputs against the dense circuit oracle.
inline CompareReport simulate_and_compare(const CircuitIR& circuit, int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("simulate_and_compare: need at least one trial");
  auto pat = compile(circuit);
  std::mt19937_64 rng(seed);
  CompareReport rep;
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    DenseState input = random_qubit_state(circuit.num_wires, rng);
    auto run = execute(pat, input, nullptr, &rng);
    DenseState corrected = correct_frames(run.output, run.frames);
    DenseState ideal = apply_circuit(circuit, input);
    double f = fidelity(corrected, ideal);
    rep.min_fidelity = std::min(rep.min_fidelity, f);
    sum += f;
  }
  rep.mean_fidelity = sum / trials;
  return rep;
}

/// Serializes a pattern to JSON-compatible text with sorted keys (plain
/// emitter, no escaping needed for this fixed shape).
inline std::string pattern_json(const MeasurementPattern& pat) {
  std::ostringstream out;
  out.precision(17);
  auto ints = [&](const std::vector<int>& v) {
    out << '[';
    for (size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ']';
  };
  out << "{\"edges\":[";
  for (size_t i = 0; i < pat.edges.size(); ++i)
    out << (i ? "," : "") << '[' << pat.edges[i].first << ',' << pat.edges[i].second << ']';
  out << "],\"input_sites\":";
  ints(pat.input_sites);
  out << ",\"num_sites\":" << pat.num_sites << ",\"num_wires\":" << pat.num_wires;
  out << ",\"output_sites\":";
  ints(pat.output_sites);
  out << ",\"steps\":[";
  for (size_t i = 0; i < pat.steps.size(); ++i) {
    out << (i ? "," : "") << "{\"angle\":" << pat.steps[i].angle << ",\"sign_deps\":";
    ints(pat.steps[i].sign_deps);
    out << ",\"site\":" << pat.steps[i].site << '}';
  }
  out << "],\"x_deps\":[";
  for (size_t i = 0; i < pat.x_deps.size(); ++i) {
    if (i) out << ',';
    ints(pat.x_deps[i]);
  }
  out << "],\"z_deps\":[";
  for (size_t i = 0; i < pat.z_deps.size(); ++i) {
    if (i) out << ',';
    ints(pat.z_deps[i]);
  }
  out << "]}";
  return out.str();
}

struct HeraldRecord {
  std::vector<std::pair<int, char>> entries;  // (outcome, Pauli label)
};

/// Measurement basis on one AKLT site: a rotation by `tilt` in the Pauli
/// plane complementary to `target`, so outcome k heralds the Pauli A_k and a
/// nonzero tilt accumulates e^{i tilt P_target} on the heralded branches.
inline Mat aklt_tilt_basis(char target, double tilt) {
  int k = target == 'X' ? 0 : target == 'Y' ? 1 : target == 'Z' ? 2 : -1;
  if (k < 0) throw std::invalid_argument("aklt_tilt_basis: target must be X, Y or Z");
  // cyclic (i, j, k) so that cos(t) A_i + sin(t) A_j = A_i exp(i t A_k)
  int i = (k + 1) % 3, j = (k + 2) % 3;
  Mat b = Mat::Identity(3, 3);
  b(i, i) = std::cos(tilt);
  b(j, j) = std::cos(tilt);
  b(i, j) = -std::sin(tilt);
  b(j, i) = std::sin(tilt);
  return b;
}

struct AkltRunResult {
  Mat logical;  // scale-normalized accumulated bond operator, later steps left
  HeraldRecord herald;
  std::vector<int> outcomes;
  double probability = 1.0;
};

/// Site-by-site measurement of the AKLT wire. Symmetry-basis steps (tilt 0)
/// herald exact logical Paulis; small tilts (|tilt| <= 0.05) accumulate
/// rotations about the target axis.
inline AkltRunResult aklt_logical_run(int n, const std::vector<BasisSpec>& bases,
                                      const std::vector<int>* forced_outcomes = nullptr,
                                      std::mt19937_64* rng = nullptr) {
  if (n < 0 || n > 8) throw std::invalid_argument("aklt_logical_run: need 0 <= n <= 8");
  if (static_cast<int>(bases.size()) != n)
    throw std::invalid_argument("aklt_logical_run: need one basis per site");
  AkltRunResult res;
  res.logical = Mat::Identity(2, 2);
  if (n == 0) return res;
  std::vector<Mat> mats;
  for (const auto& b : bases) {
    if (std::abs(b.tilt) > 0.05)
      throw std::invalid_argument("aklt_logical_run: tilt above 0.05");
    mats.push_back(aklt_tilt_basis(b.axis, b.tilt));
  }
  auto wm = wire_measure_ops(aklt_tensor(), n, mats, forced_outcomes, rng);
  res.outcomes = wm.outcomes;
  res.probability = wm.probability;
  static const char labels[3] = {'X', 'Y', 'Z'};
  for (int o : wm.outcomes) res.herald.entries.emplace_back(o, labels[o]);
  double scale = std::sqrt(std::abs(wm.logical_op.determinant()));
  if (scale < 1e-300) throw std::runtime_error("aklt_logical_run: singular logical operator");
  res.logical = wm.logical_op / scale;
  return res;
}

/// Dense Pauli matrix for a herald label.
inline Mat herald_matrix(char label) {
  switch (label) {
    case 'X':
      return gates::X();
    case 'Y':
      return gates::Y();
    case 'Z':
      return gates::Z();
    default:
      return gates::I2();
  }
}

/// Product of the heralded Paulis in logical order (later steps leftmost).
inline Mat herald_product(const HeraldRecord& h) {
  Mat p = Mat::Identity(2, 2);
  for (const auto& [outcome, label] : h.entries) p = herald_matrix(label) * p;
  return p;
}

}  // namespace symqc

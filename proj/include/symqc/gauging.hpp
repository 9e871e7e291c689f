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

#include "symqc/mps.hpp"
#include "symqc/pauli.hpp"

namespace symqc {

struct Hamiltonian {
  int n = 0;
  std::vector<std::pair<double, PauliOp>> terms;
};

enum class ChainKind { Ising, Cluster };

/// -sum X_i X_{i+1} (ising) or -sum X_{i-1} Z_i X_{i+1} (cluster).
inline Hamiltonian spin_chain_model(ChainKind kind, int n, bool periodic) {
  if (n < 3) throw std::invalid_argument("spin_chain_model: need n >= 3");
  Hamiltonian h;
  h.n = n;
  auto add = [&](std::initializer_list<std::pair<int, char>> factors) {
    PauliOp p(n);
    for (auto [site, c] : factors) {
      int s = ((site % n) + n) % n;
      if (c == 'X') p.x[s] = 1;
      if (c == 'Z') p.z[s] = 1;
    }
    h.terms.emplace_back(-1.0, p);
  };
  if (kind == ChainKind::Ising) {
    int last = periodic ? n : n - 1;
    for (int i = 0; i < last; ++i) add({{i, 'X'}, {i + 1, 'X'}});
  } else {
    int lo = periodic ? 0 : 1;
    int hi = periodic ? n : n - 1;
    for (int i = lo; i < hi; ++i) add({{i - 1, 'X'}, {i, 'Z'}, {i + 1, 'X'}});
  }
  return h;
}

struct Gauge1dReport {
  Hamiltonian pre_model;
  Hamiltonian post_model;
  std::vector<double> ghz_expectations;
  std::vector<double> cluster_expectations;
  bool ghz_check = false;
  bool cluster_check = false;
  bool symmetry_map = false;  // product-Z commutes with every cluster term
};

/// 1D gauging: the Ising chain's symmetric ground state is the GHZ contract,
/// the gauged model is the cluster chain, and the global Z2 survives as one
/// factor of the cluster Z2 x Z2.
inline Gauge1dReport gauge_1d(int n) {
  if (n < 4) throw std::invalid_argument("gauge_1d: need n >= 4");
  Gauge1dReport rep;
  rep.pre_model = spin_chain_model(ChainKind::Ising, n, true);
  rep.post_model = spin_chain_model(ChainKind::Cluster, n, true);

  auto ghz = contract(ghz_tensor(), n, Boundary::Periodic);
  rep.ghz_check = true;
  for (const auto& [coef, op] : rep.pre_model.terms) {
    double e = pauli_expectation(ghz, op).real();
    rep.ghz_expectations.push_back(e);
    if (std::abs(e - 1.0) > 1e-10) rep.ghz_check = false;
  }

  auto cluster = contract(cluster_tensor(), n, Boundary::Periodic);
  rep.cluster_check = true;
  for (const auto& [coef, op] : rep.post_model.terms) {
    double e = pauli_expectation(cluster, op).real();
    rep.cluster_expectations.push_back(e);
    if (std::abs(e - 1.0) > 1e-10) rep.cluster_check = false;
  }

  PauliOp all_z(n);
  for (int i = 0; i < n; ++i) all_z.z[i] = 1;
  rep.symmetry_map = true;
  for (const auto& [coef, op] : rep.post_model.terms)
    if (!commutes(all_z, op)) rep.symmetry_map = false;
  return rep;
}

/// Torus grid of side 2L. Points with odd coordinate parity carry the
/// original qubits; even-even points are X-cell centers and odd-odd points
/// are Z-cell centers (the two cell families of the 45-degree-rotated cell
/// lattice, each cell touching its four grid neighbors).
struct CellLattice {
  int L = 0;
  int grid = 0;  // 2L
  bool periodic = true;
  // roles: 'q' edge qubit, 'x' X-cell center, 'z' Z-cell center
  std::vector<char> role;           // indexed by r * grid + c
  std::vector<int> qubit_index;     // grid position -> register index, -1 if absent
  std::vector<int> position_of;     // register index -> grid position

  static CellLattice make(int L, bool centers_are_qubits) {
    if (L < 2) throw std::invalid_argument("CellLattice: need L >= 2");
    CellLattice lat;
    lat.L = L;
    lat.grid = 2 * L;
    lat.role.assign(lat.grid * lat.grid, 'q');
    lat.qubit_index.assign(lat.grid * lat.grid, -1);
    for (int r = 0; r < lat.grid; ++r)
      for (int c = 0; c < lat.grid; ++c) {
        char& x = lat.role[r * lat.grid + c];
        if (r % 2 == 0 && c % 2 == 0)
          x = 'x';
        else if (r % 2 == 1 && c % 2 == 1)
          x = 'z';
        else
          x = 'q';
      }
    for (int p = 0; p < lat.grid * lat.grid; ++p)
      if (centers_are_qubits || lat.role[p] == 'q') {
        lat.qubit_index[p] = static_cast<int>(lat.position_of.size());
        lat.position_of.push_back(p);
      }
    return lat;
  }

  int pos(int r, int c) const {
    int g = grid;
    return (((r % g) + g) % g) * g + (((c % g) + g) % g);
  }

  std::array<int, 4> neighbors(int p) const {
    int r = p / grid, c = p % grid;
    return {pos(r - 1, c), pos(r + 1, c), pos(r, c - 1), pos(r, c + 1)};
  }

  int num_qubits() const { return static_cast<int>(position_of.size()); }
};

struct ToricCode {
  CellLattice lattice;
  StabilizerGroup group;
};

/// Toric code on the torus: 2L^2 edge qubits, X-cell and Z-cell 4-body
/// generators, logical dimension 4.
inline ToricCode toric_code(int L) {
  if (L < 2) throw std::invalid_argument("toric_code: need L >= 2");
  ToricCode tc;
  tc.lattice = CellLattice::make(L, /*centers_are_qubits=*/false);
  const auto& lat = tc.lattice;
  tc.group.n = lat.num_qubits();
  for (int p = 0; p < lat.grid * lat.grid; ++p) {
    if (lat.role[p] == 'q') continue;
    PauliOp g(tc.group.n);
    for (int q : lat.neighbors(p)) {
      int idx = lat.qubit_index[q];
      if (idx < 0) throw std::logic_error("toric_code: center adjacent to center");
      if (lat.role[p] == 'x')
        g.x[idx] = 1;
      else
        g.z[idx] = 1;
    }
    tc.group.generators.push_back(std::move(g));
  }
  return tc;
}

struct StageRecord {
  std::string label;
  std::string before;
  std::string after;
};

struct Gauge2dResult {
  CellLattice lattice;
  StabilizerGroup group;  // raw gauged group <Z_v X_{N(v)}>
  std::vector<StageRecord> stage_log;
  bool stage1_product_identity = false;
  bool stage1_commuting = false;
};

/// Two-stage gauging of the toric code on 4L^2 qubits. Stage 1 adds a gauge
/// qubit to each X-cell center (X-star -> X-star Z_center, plus one gauge
/// term Z_q X X per original qubit). Stage 2 adds a gauge qubit to each
/// Z-cell center, extends every gauge term to Z_q X_{N(q)} and adds
/// Z_z X_{N(z)}. The final group is <Z_v X_{N(v)}> over all grid points,
/// the Hadamard dual of the 2L x 2L torus cluster graph group; the qubit
/// bijection is (r, c) -> r * 2L + c on the common grid.
inline Gauge2dResult gauge_2d(int L) {
  if (L < 2) throw std::invalid_argument("gauge_2d: need L >= 2");
  Gauge2dResult res;
  res.lattice = CellLattice::make(L, /*centers_are_qubits=*/true);
  const auto& lat = res.lattice;
  const int n = lat.num_qubits();
  const int g2 = lat.grid * lat.grid;

  auto idx = [&](int p) { return lat.qubit_index[p]; };

  // original toric generators embedded in the full register
  std::vector<PauliOp> xstars(g2, PauliOp(0)), zcells(g2, PauliOp(0));
  for (int p = 0; p < g2; ++p) {
    if (lat.role[p] == 'q') continue;
    PauliOp g(n);
    for (int q : lat.neighbors(p)) {
      if (lat.role[p] == 'x')
        g.x[idx(q)] = 1;
      else
        g.z[idx(q)] = 1;
    }
    (lat.role[p] == 'x' ? xstars : zcells)[p] = g;
  }

  // Stage 1: X-star -> X-star Z_center; gauge term per original qubit.
  std::vector<PauliOp> stage1_stars(g2, PauliOp(0)), stage1_gauge(g2, PauliOp(0));
  for (int p = 0; p < g2; ++p) {
    if (lat.role[p] == 'x') {
      PauliOp mod = xstars[p];
      mod.z[idx(p)] = 1;
      res.stage_log.push_back({"stage1 x-star " + std::to_string(p), format_pauli(xstars[p]),
                               format_pauli(mod)});
      stage1_stars[p] = std::move(mod);
    } else if (lat.role[p] == 'q') {
      PauliOp gt(n);
      gt.z[idx(p)] = 1;
      for (int q : lat.neighbors(p))
        if (lat.role[q] == 'x') gt.x[idx(q)] = 1;
      res.stage_log.push_back({"stage1 gauge term " + std::to_string(p), "", format_pauli(gt)});
      stage1_gauge[p] = std::move(gt);
    }
  }

  // stage-1 checks: Z-cell = product of its four gauge terms; all commute
  res.stage1_product_identity = true;
  for (int p = 0; p < g2; ++p) {
    if (lat.role[p] != 'z') continue;
    PauliOp prod(n);
    for (int q : lat.neighbors(p)) prod = multiply(prod, stage1_gauge[q]);
    if (!(prod == zcells[p])) res.stage1_product_identity = false;
  }
  res.stage1_commuting = true;
  std::vector<const PauliOp*> stage1_all;
  for (int p = 0; p < g2; ++p) {
    if (lat.role[p] == 'x') stage1_all.push_back(&stage1_stars[p]);
    if (lat.role[p] == 'q') stage1_all.push_back(&stage1_gauge[p]);
    if (lat.role[p] == 'z') stage1_all.push_back(&zcells[p]);
  }
  for (size_t a = 0; a < stage1_all.size(); ++a)
    for (size_t b = a + 1; b < stage1_all.size(); ++b)
      if (!commutes(*stage1_all[a], *stage1_all[b])) res.stage1_commuting = false;
  if (!res.stage1_commuting)
    throw std::runtime_error("gauge_2d: stage-1 generators do not commute");

  // Stage 2: extend gauge terms across the new Z-cell centers; add the
  // Z-cell analog of the stage-1 star modification.
  res.group.n = n;
  for (int p = 0; p < g2; ++p) {
    PauliOp fin(n);
    fin.z[idx(p)] = 1;
    for (int q : lat.neighbors(p)) fin.x[idx(q)] = 1;
    std::string before;
    if (lat.role[p] == 'x')
      before = format_pauli(stage1_stars[p]);
    else if (lat.role[p] == 'q')
      before = format_pauli(stage1_gauge[p]);
    res.stage_log.push_back({std::string("stage2 ") + lat.role[p] + " " + std::to_string(p),
                             before, format_pauli(fin)});
    res.group.generators.push_back(std::move(fin));
  }
  return res;
}

/// Graph-state group of the L2 x L2 torus square lattice.
inline StabilizerGroup cluster_2d_group(int L2) {
  if (L2 < 3) throw std::invalid_argument("cluster_2d_group: torus side below 3 has multi-edges");
  if (L2 % 2 != 0) throw std::invalid_argument("cluster_2d_group: need even side");
  const int n = L2 * L2;
  std::vector<std::vector<uint8_t>> adj(n, std::vector<uint8_t>(n, 0));
  auto id = [&](int r, int c) { return (((r % L2) + L2) % L2) * L2 + (((c % L2) + L2) % L2); };
  for (int r = 0; r < L2; ++r)
    for (int c = 0; c < L2; ++c) {
      adj[id(r, c)][id(r + 1, c)] = adj[id(r + 1, c)][id(r, c)] = 1;
      adj[id(r, c)][id(r, c + 1)] = adj[id(r, c + 1)][id(r, c)] = 1;
    }
  return graph_state_group(adj);
}

/// Conjugates every generator by Hadamard on all qubits (X and Z swap, Y
/// picks up a sign per site).
inline StabilizerGroup hadamard_dual(const StabilizerGroup& g) {
  StabilizerGroup out = g;
  for (auto& p : out.generators) {
    int ys = 0;
    for (int j = 0; j < p.n; ++j) ys += p.x[j] & p.z[j];
    p.phase_exp = ((p.phase_exp + 2 * ys) % 4 + 4) % 4;
    std::swap(p.x, p.z);
  }
  return out;
}

/// Drops redundant generators (throws if the redundancy carries a -1), so
/// dependent presentations such as the toric code's can be canonicalized.
inline StabilizerGroup independent_subset(const StabilizerGroup& g) {
  StabilizerGroup out;
  out.n = g.n;
  for (const auto& gen : g.generators) {
    auto form = canonicalize(out);
    if (auto ph = membership_phase(form, gen)) {
      if (*ph != 0)
        throw std::invalid_argument("independent_subset: generators produce -1");
      continue;
    }
    out.generators.push_back(gen);
  }
  return out;
}

struct LineReport {
  std::string label;
  std::vector<int> qubits;
  bool z_line_in_group = false;
  bool x_line_commutes = false;
};

/// The original-lattice lines are the diagonals of the common grid. For each
/// diagonal, tests Z-line membership in the (canonicalized) group and
/// X-line commutation with every generator.
inline std::vector<LineReport> line_symmetry_report(const StabilizerGroup& group,
                                                    const CellLattice& lat) {
  auto canon = canonicalize(independent_subset(group));
  std::vector<LineReport> reports;
  auto run_line = [&](const std::string& label, const std::vector<int>& positions) {
    LineReport rep;
    rep.label = label;
    PauliOp zline(group.n), xline(group.n);
    bool complete = true;
    for (int p : positions) {
      int q = lat.qubit_index[p];
      if (q < 0) {
        complete = false;
        break;
      }
      rep.qubits.push_back(q);
      zline.z[q] = 1;
      xline.x[q] = 1;
    }
    if (!complete) return;  // line leaves the register (toric-code centers)
    rep.z_line_in_group = contains(canon, zline);
    rep.x_line_commutes = true;
    for (const auto& g : group.generators)
      if (!commutes(xline, g)) rep.x_line_commutes = false;
    reports.push_back(std::move(rep));
  };
  for (int d = 0; d < lat.grid; ++d) {
    std::vector<int> main_diag, anti_diag;
    for (int r = 0; r < lat.grid; ++r) {
      main_diag.push_back(lat.pos(r, r + d));
      anti_diag.push_back(lat.pos(r, d - r));
    }
    run_line("line+ " + std::to_string(d), main_diag);
    run_line("line- " + std::to_string(d), anti_diag);
  }
  return reports;
}

}  // namespace symqc

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
#include <cstdint>
#include <string>
#include <vector>

#include "symqc/qmath.hpp"

namespace symqc {

/// Phased n-qubit Pauli in symplectic bit form.
/// The operator is i^phase_exp · ⊗_j X^{x[j]} Z^{z[j]}, so Y = i·XZ.
struct PauliOp {
  int n = 0;
  std::vector<uint8_t> x, z;
  int phase_exp = 0;  // power of i, mod 4

  PauliOp() = default;
  explicit PauliOp(int nq) : n(nq), x(nq, 0), z(nq, 0) {}

  static PauliOp identity(int nq) { return PauliOp(nq); }

  static PauliOp single(int nq, int site, char letter) {
    PauliOp p(nq);
    switch (letter) {
      case 'I':
        break;
      case 'X':
        p.x[site] = 1;
        break;
      case 'Z':
        p.z[site] = 1;
        break;
      case 'Y':
        p.x[site] = 1;
        p.z[site] = 1;
        p.phase_exp = 1;
        break;
      default:
        throw std::invalid_argument("PauliOp: unknown letter");
    }
    return p;
  }

  bool is_identity_bits() const {
    for (int j = 0; j < n; ++j)
      if (x[j] || z[j]) return false;
    return true;
  }

  cx phase() const {
    static const cx table[4] = {cx(1, 0), cx(0, 1), cx(-1, 0), cx(0, -1)};
    return table[(phase_exp % 4 + 4) % 4];
  }

  bool operator==(const PauliOp& o) const {
    return n == o.n && x == o.x && z == o.z && (phase_exp % 4 + 4) % 4 == (o.phase_exp % 4 + 4) % 4;
  }
};

inline PauliOp multiply(const PauliOp& p, const PauliOp& q) {
  if (p.n != q.n) throw std::invalid_argument("PauliOp multiply: size mismatch");
  PauliOp r(p.n);
  int extra = 0;
  for (int j = 0; j < p.n; ++j) {
    // Z^{z_p} X^{x_q} = (-1)^{z_p x_q} X^{x_q} Z^{z_p}
    extra += 2 * (p.z[j] & q.x[j]);
    r.x[j] = p.x[j] ^ q.x[j];
    r.z[j] = p.z[j] ^ q.z[j];
  }
  r.phase_exp = (p.phase_exp + q.phase_exp + extra) % 4;
  return r;
}

inline PauliOp inverse(const PauliOp& p) {
  // (i^k ⊗X^xZ^z)† = i^{-k} (-1)^{x·z} ⊗X^xZ^z
  PauliOp r = p;
  int xz = 0;
  for (int j = 0; j < p.n; ++j) xz += p.x[j] & p.z[j];
  r.phase_exp = ((-p.phase_exp + 2 * xz) % 4 + 4) % 4;
  return r;
}

inline bool commutes(const PauliOp& p, const PauliOp& q) {
  if (p.n != q.n) throw std::invalid_argument("PauliOp commutes: size mismatch");
  int s = 0;
  for (int j = 0; j < p.n; ++j) s += (p.x[j] & q.z[j]) ^ (p.z[j] & q.x[j]);
  return s % 2 == 0;
}

inline Mat pauli_site_matrix(uint8_t xb, uint8_t zb) {
  if (xb && zb) return gates::X() * gates::Z();
  if (xb) return gates::X();
  if (zb) return gates::Z();
  return gates::I2();
}

inline Mat dense_matrix(const PauliOp& p) {
  Mat m = Mat::Identity(1, 1);
  for (int j = 0; j < p.n; ++j) {
    const Mat s = pauli_site_matrix(p.x[j], p.z[j]);
    Mat out(m.rows() * 2, m.cols() * 2);
    out.block(0, 0, m.rows(), m.cols()) = m * s(0, 0);
    out.block(0, m.cols(), m.rows(), m.cols()) = m * s(0, 1);
    out.block(m.rows(), 0, m.rows(), m.cols()) = m * s(1, 0);
    out.block(m.rows(), m.cols(), m.rows(), m.cols()) = m * s(1, 1);
    std::swap(m, out);
  }
  return p.phase() * m;
}

/// ⟨ψ|P|ψ⟩ on a qubit register.
inline cx pauli_expectation(const DenseState& state, const PauliOp& p) {
  if (p.n != state.num_sites()) throw std::invalid_argument("pauli_expectation: size mismatch");
  DenseState tmp = state;
  for (int j = 0; j < p.n; ++j)
    if (p.x[j] || p.z[j]) apply_on_sites(tmp, pauli_site_matrix(p.x[j], p.z[j]), {j});
  return p.phase() * cx(state.amps.adjoint() * tmp.amps);
}

/// Text form: sign then one letter per qubit, e.g. `+XZXI`, `-iYZI`.
inline std::string format_pauli(const PauliOp& p) {
  int k = (p.phase_exp % 4 + 4) % 4;
  std::string letters;
  for (int j = 0; j < p.n; ++j) {
    if (p.x[j] && p.z[j]) {
      letters += 'Y';
      k = (k + 3) % 4;  // Y carries a factor i in the XZ convention
    } else if (p.x[j]) {
      letters += 'X';
    } else if (p.z[j]) {
      letters += 'Z';
    } else {
      letters += 'I';
    }
  }
  static const char* signs[4] = {"+", "+i", "-", "-i"};
  return signs[k] + letters;
}

inline PauliOp parse_pauli(const std::string& s) {
  size_t pos = 0;
  int k = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    bool neg = s[pos] == '-';
    ++pos;
    bool imag = pos < s.size() && s[pos] == 'i';
    if (imag) ++pos;
    k = (neg ? 2 : 0) + (imag ? 1 : 0);
  }
  PauliOp p(static_cast<int>(s.size() - pos));
  for (int j = 0; pos < s.size(); ++pos, ++j) {
    PauliOp site = PauliOp::single(p.n, j, s[pos]);
    p.x[j] = site.x[j];
    p.z[j] = site.z[j];
    k = (k + site.phase_exp) % 4;
  }
  p.phase_exp = k;
  return p;
}

/// Independent commuting generators; phases restricted to ±1.
struct StabilizerGroup {
  int n = 0;
  std::vector<PauliOp> generators;
};

namespace detail {

inline int pivot_column(const PauliOp& p) {
  for (int j = 0; j < p.n; ++j)
    if (p.x[j]) return j;
  for (int j = 0; j < p.n; ++j)
    if (p.z[j]) return p.n + j;
  return 2 * p.n;
}

inline bool has_bit(const PauliOp& p, int col) {
  return col < p.n ? p.x[col] != 0 : p.z[col - p.n] != 0;
}

}  // namespace detail

/// Unique reduced row-echelon symplectic form with phase normalization.
/// Two stabilizer groups are equal iff their canonical forms are identical.
inline std::vector<PauliOp> canonicalize(const StabilizerGroup& g) {
  for (size_t a = 0; a < g.generators.size(); ++a) {
    if (g.generators[a].phase_exp % 2 != 0)
      throw std::invalid_argument("canonicalize: generator phase must be real");
    for (size_t b = a + 1; b < g.generators.size(); ++b)
      if (!commutes(g.generators[a], g.generators[b]))
        throw std::invalid_argument("canonicalize: generators anticommute");
  }
  std::vector<PauliOp> rows = g.generators;
  std::vector<PauliOp> done;
  const int ncols = 2 * g.n;
  for (int col = 0; col < ncols; ++col) {
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const PauliOp& r) { return detail::has_bit(r, col); });
    if (it == rows.end()) continue;
    PauliOp pivot = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (detail::has_bit(r, col)) r = multiply(r, pivot);
    for (auto& r : done)
      if (detail::has_bit(r, col)) r = multiply(r, pivot);
    done.push_back(std::move(pivot));
  }
  if (!rows.empty())
    throw std::invalid_argument("canonicalize: dependent generators (or -1 generated)");
  std::sort(done.begin(), done.end(), [](const PauliOp& a, const PauliOp& b) {
    return detail::pivot_column(a) < detail::pivot_column(b);
  });
  return done;
}

/// GF(2) membership solve against a canonical form. Returns the phase exponent
/// (0 for +p, 2 for -p) if ±p is generated, and nullopt otherwise.
inline std::optional<int> membership_phase(const std::vector<PauliOp>& canonical, const PauliOp& p) {
  PauliOp residue = p;
  for (const auto& row : canonical) {
    int col = detail::pivot_column(row);
    if (detail::has_bit(residue, col)) residue = multiply(residue, row);
  }
  if (!residue.is_identity_bits()) return std::nullopt;
  // residue = p·g = i^d·1 with g in the group and g^{-1} = g, so p = i^d·g
  return (residue.phase_exp % 4 + 4) % 4;
}

inline bool contains(const std::vector<PauliOp>& canonical, const PauliOp& p) {
  auto d = membership_phase(canonical, p);
  return d && *d == 0;
}

inline int symplectic_rank(const StabilizerGroup& g) {
  // GF(2) rank of the generator matrix, ignoring phases.
  std::vector<std::vector<uint8_t>> rows;
  for (const auto& p : g.generators) {
    std::vector<uint8_t> r(p.x);
    r.insert(r.end(), p.z.begin(), p.z.end());
    rows.push_back(std::move(r));
  }
  int rank = 0;
  const int ncols = 2 * g.n;
  size_t rpos = 0;
  for (int col = 0; col < ncols && rpos < rows.size(); ++col) {
    size_t sel = rpos;
    while (sel < rows.size() && !rows[sel][col]) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rpos], rows[sel]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != rpos && rows[r][col])
        for (int c = 0; c < ncols; ++c) rows[r][c] ^= rows[rpos][c];
    ++rpos;
    ++rank;
  }
  return rank;
}

/// K_a = X_a ⊗ ∏_{b∈N(a)} Z_b for each vertex a.
inline StabilizerGroup graph_state_group(const std::vector<std::vector<uint8_t>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(adjacency[a].size()) != n)
      throw std::invalid_argument("graph_state_group: adjacency not square");
    if (adjacency[a][a]) throw std::invalid_argument("graph_state_group: nonzero diagonal");
    for (int b = 0; b < n; ++b)
      if (adjacency[a][b] != adjacency[b][a])
        throw std::invalid_argument("graph_state_group: adjacency not symmetric");
  }
  StabilizerGroup g;
  g.n = n;
  for (int a = 0; a < n; ++a) {
    PauliOp k(n);
    k.x[a] = 1;
    for (int b = 0; b < n; ++b)
      if (adjacency[a][b]) k.z[b] = 1;
    g.generators.push_back(std::move(k));
  }
  return g;
}

/// The unique state stabilized by a full-rank group (throws if rank < n).
inline DenseState stabilized_state(const StabilizerGroup& g) {
  if (symplectic_rank(g) != g.n)
    throw std::invalid_argument("stabilized_state: group does not fix a unique state");
  const Eigen::Index dim = Eigen::Index(1) << g.n;
  if (g.n > 20) throw std::invalid_argument("stabilized_state: register too large");
  // Project a seed state with ∏ (1+g)/2.
  for (Eigen::Index seed = 0; seed < dim; ++seed) {
    Vec v = Vec::Zero(dim);
    v(seed) = 1.0;
    DenseState s(std::vector<int>(g.n, 2), std::move(v));
    for (const auto& p : g.generators) {
      DenseState t = s;
      for (int j = 0; j < p.n; ++j)
        if (p.x[j] || p.z[j]) apply_on_sites(t, pauli_site_matrix(p.x[j], p.z[j]), {j});
      s.amps = 0.5 * (s.amps + p.phase() * t.amps);
    }
    if (s.amps.norm() > 1e-6) {
      s.normalize();
      return s;
    }
  }
  throw std::runtime_error("stabilized_state: projection annihilated every seed");
}

struct CHLevel {
  int level = 0;          // smallest k with u ∈ C^(k); 0 when above k_max
  bool above_kmax = false;
};

namespace detail {

inline std::vector<PauliOp> all_paulis_unphased(int n) {
  std::vector<PauliOp> out;
  const int total = 1 << (2 * n);
  out.reserve(total);
  for (int bits = 0; bits < total; ++bits) {
    PauliOp p(n);
    for (int j = 0; j < n; ++j) {
      p.x[j] = (bits >> (2 * j)) & 1;
      p.z[j] = (bits >> (2 * j + 1)) & 1;
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline bool is_phased_pauli(const Mat& u, int n, double tol = 1e-8) {
  const double dim = std::pow(2.0, n);
  for (const auto& p : all_paulis_unphased(n)) {
    cx overlap = (dense_matrix(p).adjoint() * u).trace() / dim;
    if (std::abs(std::abs(overlap) - 1.0) < tol) return true;
  }
  return false;
}

inline std::vector<PauliOp> pauli_generators(int n) {
  std::vector<PauliOp> gens;
  for (int j = 0; j < n; ++j) {
    gens.push_back(PauliOp::single(n, j, 'X'));
    gens.push_back(PauliOp::single(n, j, 'Z'));
  }
  return gens;
}

inline bool is_clifford(const Mat& u, int n, double tol = 1e-8) {
  for (const auto& p : pauli_generators(n))
    if (!is_phased_pauli(u * dense_matrix(p) * u.adjoint(), n, tol)) return false;
  return true;
}

}  // namespace detail

/// Brute-force Clifford-hierarchy classifier for n ≤ 3, k_max ≤ 3.
inline CHLevel ch_level(const Mat& u, int n, int k_max = 3) {
  if (n < 1 || n > 3) throw std::invalid_argument("ch_level: n must be in [1,3]");
  if (k_max < 1 || k_max > 3) throw std::invalid_argument("ch_level: k_max must be in [1,3]");
  if (!is_unitary(u)) throw std::invalid_argument("ch_level: input is not unitary");
  if (detail::is_phased_pauli(u, n)) return {1, false};
  if (k_max >= 2 && detail::is_clifford(u, n)) return {2, false};
  if (k_max >= 3) {
    bool level3 = true;
    for (const auto& p : detail::pauli_generators(n))
      if (!detail::is_clifford(u * dense_matrix(p) * u.adjoint(), n)) {
        level3 = false;
        break;
      }
    if (level3) return {3, false};
  }
  return {0, true};
}

inline std::string serialize_group(const StabilizerGroup& g) {
  std::string out;
  for (const auto& p : g.generators) out += format_pauli(p) + "\n";
  return out;
}

inline StabilizerGroup parse_group(const std::string& text) {
  StabilizerGroup g;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    g.generators.push_back(parse_pauli(line));
  }
  g.n = g.generators.empty() ? 0 : g.generators.front().n;
  return g;
}

}  // namespace symqc

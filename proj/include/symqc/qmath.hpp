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

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace symqc {

using cx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kOutcomeFloor = 1e-12;

/// Accumulated X^x Z^z correction record for one logical qubit.
struct ByproductFrame {
  int x_bit = 0;
  int z_bit = 0;
};

inline bool is_unitary(const Mat& u, double tol = kUnitaryTol) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() < tol;
}

/// Dense statevector over an ordered register of sites (dimension 2 or 3).
/// Site 0 is the most significant digit of the amplitude index.
struct DenseState {
  std::vector<int> site_dims;
  Vec amps;

  DenseState() = default;
  DenseState(std::vector<int> dims, Vec a) : site_dims(std::move(dims)), amps(std::move(a)) {
    if (amps.size() != total_dim())
      throw std::invalid_argument("DenseState: amplitude length does not match site dims");
  }

  int num_sites() const { return static_cast<int>(site_dims.size()); }

  Eigen::Index total_dim() const {
    Eigen::Index d = 1;
    for (int s : site_dims) d *= s;
    return d;
  }

  Eigen::Index stride(int site) const {
    Eigen::Index s = 1;
    for (int i = site + 1; i < num_sites(); ++i) s *= site_dims[i];
    return s;
  }

  double norm() const { return amps.norm(); }

  void normalize() {
    double n = norm();
    if (n < kOutcomeFloor) throw std::runtime_error("DenseState: cannot normalize zero state");
    amps /= n;
  }

  bool all_qubits() const {
    for (int d : site_dims)
      if (d != 2) return false;
    return true;
  }

  /// Computational basis state |digits⟩.
  static DenseState basis(const std::vector<int>& dims, const std::vector<int>& digits) {
    DenseState s;
    s.site_dims = dims;
    s.amps = Vec::Zero(s.total_dim());
    Eigen::Index idx = 0;
    for (size_t i = 0; i < dims.size(); ++i) idx = idx * dims[i] + digits[i];
    s.amps(idx) = 1.0;
    return s;
  }

  static DenseState zero_qubits(int n) {
    return basis(std::vector<int>(n, 2), std::vector<int>(n, 0));
  }

  /// |+⟩^n.
  static DenseState plus_qubits(int n) {
    DenseState s;
    s.site_dims.assign(n, 2);
    s.amps = Vec::Constant(Eigen::Index(1) << n, 1.0 / std::sqrt(double(Eigen::Index(1) << n)));
    return s;
  }

  static DenseState from_vector(Vec v, std::vector<int> dims) {
    DenseState s(std::move(dims), std::move(v));
    s.normalize();
    return s;
  }

  /// Tensor product: this ⊗ other (other appended as trailing sites).
  DenseState tensor(const DenseState& other) const {
    DenseState out;
    out.site_dims = site_dims;
    out.site_dims.insert(out.site_dims.end(), other.site_dims.begin(), other.site_dims.end());
    out.amps = Vec::Zero(total_dim() * other.total_dim());
    for (Eigen::Index i = 0; i < amps.size(); ++i)
      for (Eigen::Index j = 0; j < other.amps.size(); ++j)
        out.amps(i * other.amps.size() + j) = amps(i) * other.amps(j);
    return out;
  }
};

inline DenseState random_qubit_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vec v(Eigen::Index(1) << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cx(g(rng), g(rng));
  return DenseState::from_vector(std::move(v), std::vector<int>(n, 2));
}

/// Applies a unitary on the listed sites (arbitrary mixed dimensions).
inline void apply_on_sites(DenseState& state, const Mat& u, const std::vector<int>& sites) {
  Eigen::Index block = 1;
  std::vector<Eigen::Index> strides(sites.size());
  std::vector<int> dims(sites.size());
  for (size_t k = 0; k < sites.size(); ++k) {
    if (sites[k] < 0 || sites[k] >= state.num_sites())
      throw std::out_of_range("apply_on_sites: site index out of range");
    dims[k] = state.site_dims[sites[k]];
    strides[k] = state.stride(sites[k]);
    block *= dims[k];
  }
  if (u.rows() != block || u.cols() != block)
    throw std::invalid_argument("apply_on_sites: operator dimension mismatch");

  // Offset of local basis state a within the full register.
  std::vector<Eigen::Index> offsets(block);
  for (Eigen::Index a = 0; a < block; ++a) {
    Eigen::Index off = 0, rem = a;
    for (int k = static_cast<int>(sites.size()) - 1; k >= 0; --k) {
      off += (rem % dims[k]) * strides[k];
      rem /= dims[k];
    }
    offsets[a] = off;
  }

  const Eigen::Index n = state.amps.size();
  std::vector<bool> visited(n, false);
  Vec local(block), rotated(block);
  for (Eigen::Index base = 0; base < n; ++base) {
    if (visited[base]) continue;
    // base must have digit 0 on every target site
    bool root = true;
    for (size_t k = 0; k < sites.size(); ++k)
      if ((base / strides[k]) % dims[k] != 0) {
        root = false;
        break;
      }
    if (!root) continue;
    for (Eigen::Index a = 0; a < block; ++a) {
      local(a) = state.amps(base + offsets[a]);
      visited[base + offsets[a]] = true;
    }
    rotated.noalias() = u * local;
    for (Eigen::Index a = 0; a < block; ++a) state.amps(base + offsets[a]) = rotated(a);
  }
}

namespace gates {

inline Mat I2() { return Mat::Identity(2, 2); }
inline Mat X() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
inline Mat Y() {
  Mat m(2, 2);
  m << 0, cx(0, -1), cx(0, 1), 0;
  return m;
}
inline Mat Z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
inline Mat H() {
  Mat m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}
inline Mat S() {
  Mat m(2, 2);
  m << 1, 0, 0, cx(0, 1);
  return m;
}
inline Mat T() {
  Mat m(2, 2);
  m << 1, 0, 0, std::polar(1.0, M_PI / 4);
  return m;
}
/// exp(iθZ/2)
inline Mat RZ(double theta) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = std::polar(1.0, theta / 2);
  m(1, 1) = std::polar(1.0, -theta / 2);
  return m;
}
/// exp(iθX/2)
inline Mat RX(double theta) { return H() * RZ(theta) * H(); }
/// exp(iθZ), the full-angle rotation used by gate teleportation
inline Mat expiZ(double theta) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = std::polar(1.0, theta);
  m(1, 1) = std::polar(1.0, -theta);
  return m;
}
/// exp(iθX)
inline Mat expiX(double theta) { return H() * expiZ(theta) * H(); }
inline Mat CZ() {
  Mat m = Mat::Identity(4, 4);
  m(3, 3) = -1;
  return m;
}
inline Mat CNOT() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}
inline Mat CCZ() {
  Mat m = Mat::Identity(8, 8);
  m(7, 7) = -1;
  return m;
}
inline Mat SWAP() {
  Mat m = Mat::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
  return m;
}

}  // namespace gates

enum class GateKind { H, S, T, X, Y, Z, RX, RZ, CZ, CNOT, CCZ, SWAP };

struct Gate {
  GateKind kind;
  std::vector<int> wires;
  double angle = 0.0;
};

struct CircuitIR {
  int num_wires = 0;
  std::vector<Gate> gates;
};

inline int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CZ:
    case GateKind::CNOT:
    case GateKind::SWAP:
      return 2;
    case GateKind::CCZ:
      return 3;
    default:
      return 1;
  }
}

inline bool gate_has_angle(GateKind k) { return k == GateKind::RX || k == GateKind::RZ; }

inline Mat gate_matrix(const Gate& g) {
  switch (g.kind) {
    case GateKind::H:
      return gates::H();
    case GateKind::S:
      return gates::S();
    case GateKind::T:
      return gates::T();
    case GateKind::X:
      return gates::X();
    case GateKind::Y:
      return gates::Y();
    case GateKind::Z:
      return gates::Z();
    case GateKind::RX:
      return gates::RX(g.angle);
    case GateKind::RZ:
      return gates::RZ(g.angle);
    case GateKind::CZ:
      return gates::CZ();
    case GateKind::CNOT:
      return gates::CNOT();
    case GateKind::CCZ:
      return gates::CCZ();
    case GateKind::SWAP:
      return gates::SWAP();
  }
  throw std::logic_error("gate_matrix: unknown gate kind");
}

inline std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H:
      return "H";
    case GateKind::S:
      return "S";
    case GateKind::T:
      return "T";
    case GateKind::X:
      return "X";
    case GateKind::Y:
      return "Y";
    case GateKind::Z:
      return "Z";
    case GateKind::RX:
      return "RX";
    case GateKind::RZ:
      return "RZ";
    case GateKind::CZ:
      return "CZ";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::CCZ:
      return "CCZ";
    case GateKind::SWAP:
      return "SWAP";
  }
  return "?";
}

inline std::optional<GateKind> gate_kind_from_name(const std::string& s) {
  static const std::pair<const char*, GateKind> table[] = {
      {"H", GateKind::H},   {"S", GateKind::S},       {"T", GateKind::T},
      {"X", GateKind::X},   {"Y", GateKind::Y},       {"Z", GateKind::Z},
      {"RX", GateKind::RX}, {"RZ", GateKind::RZ},     {"CZ", GateKind::CZ},
      {"CNOT", GateKind::CNOT}, {"CCZ", GateKind::CCZ}, {"SWAP", GateKind::SWAP}};
  for (auto& [name, kind] : table)
    if (s == name) return kind;
  return std::nullopt;
}

/// Text IR: one gate per line, e.g. `H 0`, `RZ 0 0.785398`, `CZ 0 1`.
inline CircuitIR parse_circuit(const std::string& text, int num_wires = -1) {
  CircuitIR c;
  int max_wire = -1;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string name;
    if (!(ls >> name)) continue;
    auto kind = gate_kind_from_name(name);
    if (!kind) throw std::invalid_argument("parse_circuit: unknown gate " + name);
    Gate g{*kind, {}, 0.0};
    for (int i = 0; i < gate_arity(*kind); ++i) {
      int w;
      if (!(ls >> w)) throw std::invalid_argument("parse_circuit: missing wire index");
      g.wires.push_back(w);
      max_wire = std::max(max_wire, w);
    }
    if (gate_has_angle(*kind)) {
      if (!(ls >> g.angle)) throw std::invalid_argument("parse_circuit: missing angle");
      if (!std::isfinite(g.angle)) throw std::invalid_argument("parse_circuit: non-finite angle");
    }
    c.gates.push_back(std::move(g));
  }
  c.num_wires = num_wires >= 0 ? num_wires : max_wire + 1;
  return c;
}

inline std::string emit_circuit(const CircuitIR& c) {
  std::ostringstream out;
  for (const auto& g : c.gates) {
    out << gate_name(g.kind);
    for (int w : g.wires) out << ' ' << w;
    if (gate_has_angle(g.kind)) out << ' ' << g.angle;
    out << '\n';
  }
  return out.str();
}

inline DenseState apply_circuit(const CircuitIR& circuit, const DenseState& state) {
  if (circuit.num_wires != state.num_sites())
    throw std::invalid_argument("apply_circuit: wire count does not match state");
  if (!state.all_qubits())
    throw std::invalid_argument("apply_circuit: spin-1 site present");
  DenseState out = state;
  for (const auto& g : circuit.gates) {
    for (int w : g.wires)
      if (w < 0 || w >= circuit.num_wires)
        throw std::out_of_range("apply_circuit: wire index out of range");
    apply_on_sites(out, gate_matrix(g), g.wires);
  }
  out.normalize();
  return out;
}

struct MeasureResult {
  int outcome = 0;
  double probability = 0.0;
  DenseState post;
};

/// Projective measurement of one site in the basis given by the columns of
/// `basis`. With `remove`, the measured site is projected out of the register;
/// otherwise it is retained as a product factor.
inline MeasureResult measure(const DenseState& state, int site, const Mat& basis,
                             std::optional<int> forced, std::mt19937_64* rng,
                             bool remove = true) {
  const int d = state.site_dims.at(site);
  if (basis.rows() != d || basis.cols() != d)
    throw std::invalid_argument("measure: basis dimension mismatch");
  if (!is_unitary(basis)) throw std::invalid_argument("measure: basis is not unitary");

  // Rotate the site into the measurement basis.
  DenseState rotated = state;
  apply_on_sites(rotated, basis.adjoint(), {site});

  const Eigen::Index stride = state.stride(site);
  const Eigen::Index n = state.amps.size();
  std::vector<double> probs(d, 0.0);
  for (Eigen::Index i = 0; i < n; ++i)
    probs[(i / stride) % d] += std::norm(rotated.amps(i));

  int outcome;
  if (forced) {
    outcome = *forced;
    if (outcome < 0 || outcome >= d) throw std::invalid_argument("measure: forced outcome out of range");
    if (probs[outcome] <= kOutcomeFloor)
      throw std::runtime_error("measure: forced outcome has zero probability");
  } else {
    if (!rng) throw std::invalid_argument("measure: sampling requires a generator");
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double r = unif(*rng), acc = 0.0;
    outcome = d - 1;
    for (int o = 0; o < d; ++o) {
      acc += probs[o];
      if (r < acc) {
        outcome = o;
        break;
      }
    }
  }

  MeasureResult res;
  res.outcome = outcome;
  res.probability = probs[outcome];

  std::vector<int> dims = state.site_dims;
  dims.erase(dims.begin() + site);
  Vec post(n / d);
  Eigen::Index j = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if ((i / stride) % d == outcome) post(j++) = rotated.amps(i);
  DenseState reduced(dims, std::move(post));
  reduced.normalize();
  if (remove) {
    res.post = std::move(reduced);
  } else {
    // Retain the measured site as the product factor |b_outcome⟩.
    Vec out_amps = Vec::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::Index digit = (i / stride) % d;
      Eigen::Index prefix = i / (stride * d);
      Eigen::Index suffix = i % stride;
      out_amps(i) = reduced.amps(prefix * stride + suffix) * basis(digit, outcome);
    }
    res.post = DenseState(state.site_dims, std::move(out_amps));
  }
  return res;
}

inline MeasureResult measure_forced(const DenseState& state, int site, const Mat& basis,
                                    int outcome, bool remove = true) {
  return measure(state, site, basis, outcome, nullptr, remove);
}

inline double fidelity(const DenseState& a, const DenseState& b) {
  if (a.site_dims != b.site_dims) throw std::invalid_argument("fidelity: site structure mismatch");
  cx ov = a.amps.adjoint() * b.amps;
  double f = std::norm(ov) / (a.amps.squaredNorm() * b.amps.squaredNorm());
  return std::min(f, 1.0);
}

/// ⟨ψ|O|ψ⟩ for O acting on the listed sites.
inline cx expectation(const DenseState& state, const Mat& op, const std::vector<int>& sites) {
  DenseState tmp = state;
  apply_on_sites(tmp, op, sites);
  return cx(state.amps.adjoint() * tmp.amps);
}

}  // namespace symqc

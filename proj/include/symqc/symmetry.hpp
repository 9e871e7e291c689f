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

namespace symqc {

/// Symmetry data: a physical unitary U_g on (possibly blocked) sites and the
/// virtual conjugation unitary V_g. R_g is the optional right-leg operator of
/// the gauge form.
struct SymmetryAction {
  std::string label;
  Mat physical_op;
  Mat virtual_left;
  std::optional<Mat> virtual_right;
  int blocking = 1;

  void validate() const {
    if (blocking != 1 && blocking != 2)
      throw std::invalid_argument("SymmetryAction: blocking must be 1 or 2");
    if (!is_unitary(physical_op) || !is_unitary(virtual_left))
      throw std::invalid_argument("SymmetryAction: operators must be unitary");
    if (virtual_right && !is_unitary(*virtual_right))
      throw std::invalid_argument("SymmetryAction: right operator must be unitary");
  }
};

/// Blocks `blocking` consecutive sites into one effective tensor with
/// phys_dim^blocking physical indices.
inline SiteTensor block_tensor(const SiteTensor& t, int blocking) {
  t.validate();
  if (blocking == 1) return t;
  if (blocking != 2) throw std::invalid_argument("block_tensor: blocking must be 1 or 2");
  std::vector<Mat> ops;
  for (int i = 0; i < t.phys_dim; ++i)
    for (int j = 0; j < t.phys_dim; ++j)
      ops.push_back((t.normalization * t.ops[i]) * (t.normalization * t.ops[j]));
  SiteTensor out;
  out.phys_dim = t.phys_dim * t.phys_dim;
  out.bond_dim = t.bond_dim;
  out.ops = std::move(ops);
  out.normalization = 1.0;
  out.left_boundary = t.left_boundary;
  out.right_boundary = t.right_boundary;
  // phys_dim outside {2,3}: skip validate(), shapes were checked above
  return out;
}

/// max_i || sum_j (U_g)_{ij} A_j - V_g A_i V_g^dag || on the blocked tensor.
inline double global_residual(const SiteTensor& t, const SymmetryAction& act) {
  act.validate();
  SiteTensor b = block_tensor(t, act.blocking);
  const int p = static_cast<int>(b.ops.size());
  if (act.physical_op.rows() != p)
    throw std::invalid_argument("global_residual: physical operator shape mismatch");
  if (act.virtual_left.rows() != b.bond_dim)
    throw std::invalid_argument("global_residual: virtual operator shape mismatch");
  double worst = 0.0;
  for (int i = 0; i < p; ++i) {
    Mat lhs = Mat::Zero(b.bond_dim, b.bond_dim);
    for (int j = 0; j < p; ++j) lhs += act.physical_op(i, j) * b.ops[j];
    Mat rhs = act.virtual_left * b.ops[i] * act.virtual_left.adjoint();
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

enum class VirtualSide { Left, Right };

/// Residual of the one-leg gauge relation: sum_j (U)_{ij} A_j equals
/// V A_i (right leg) or A_i V (left leg).
inline double gauge_residual(const SiteTensor& t, const Mat& physical_op, VirtualSide side,
                             const Mat& virtual_op) {
  t.validate();
  if (physical_op.rows() != t.phys_dim)
    throw std::invalid_argument("gauge_residual: physical operator shape mismatch");
  if (virtual_op.rows() != t.bond_dim)
    throw std::invalid_argument("gauge_residual: virtual operator shape mismatch");
  double worst = 0.0;
  for (int i = 0; i < t.phys_dim; ++i) {
    Mat lhs = Mat::Zero(t.bond_dim, t.bond_dim);
    for (int j = 0; j < t.phys_dim; ++j) lhs += physical_op(i, j) * t.ops[j];
    // the right leg is the chain input side, so its action multiplies first
  Mat rhs = side == VirtualSide::Right ? Mat(t.ops[i] * virtual_op) : Mat(virtual_op * t.ops[i]);
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

/// Phase omega with V_g V_h = omega V_h V_g; throws unless the group
/// commutator is scalar.
inline cx projective_phase(const Mat& v_g, const Mat& v_h) {
  if (!is_unitary(v_g) || !is_unitary(v_h))
    throw std::invalid_argument("projective_phase: operators must be unitary");
  Mat comm = v_g * v_h * v_g.adjoint() * v_h.adjoint();
  cx w = comm.trace() / double(comm.rows());
  if ((comm - w * Mat::Identity(comm.rows(), comm.cols())).cwiseAbs().maxCoeff() > kUnitaryTol)
    throw std::invalid_argument("projective_phase: commutator is not scalar");
  return w / std::abs(w);
}

struct StabilizerCheckReport {
  bool holds = false;
  double worst_expectation = 0.0;
  std::vector<double> expectations;
};

/// Expectation of the localized three-body operator R(k-1) U(k) L(k+1) on the
/// contracted chain, for every bulk position k.
inline StabilizerCheckReport symmetry_stabilizer_check(const SiteTensor& t,
                                                       const SymmetryAction& act, int n) {
  act.validate();
  t.validate();
  if (!act.virtual_right)
    throw std::invalid_argument("symmetry_stabilizer_check: needs both virtual sides");
  if (n > 10) throw std::invalid_argument("symmetry_stabilizer_check: n above 10");
  if (act.virtual_left.rows() != t.phys_dim || act.virtual_right->rows() != t.phys_dim)
    throw std::invalid_argument(
        "symmetry_stabilizer_check: virtual images must act on the physical space");
  auto state = contract(t, n);
  StabilizerCheckReport rep;
  rep.holds = true;
  rep.worst_expectation = 1.0;
  for (int k = 1; k + 1 < n; ++k) {
    DenseState tmp = state;
    apply_on_sites(tmp, *act.virtual_right, {k - 1});
    apply_on_sites(tmp, act.physical_op, {k});
    apply_on_sites(tmp, act.virtual_left, {k + 1});
    cx e = state.amps.adjoint() * tmp.amps;
    rep.expectations.push_back(e.real());
    if (std::abs(e - cx(1, 0)) > 1e-10) rep.holds = false;
    rep.worst_expectation = std::min(rep.worst_expectation, e.real());
  }
  return rep;
}

/// Named verified actions for the shipped tensors.

inline SymmetryAction ghz_symmetry() {
  SymmetryAction a;
  a.label = "ghz Z->X";
  a.physical_op = gates::Z();
  a.virtual_left = gates::X();
  a.blocking = 1;
  return a;
}

/// Blocked cluster tensor A_{ij} = X^i Z^j: Z on the first block site
/// conjugates by Z, Z on the second by X.
inline SymmetryAction cluster_symmetry_first() {
  SymmetryAction a;
  a.label = "cluster Z(odd)->Z";
  Mat u = Mat::Zero(4, 4);
  u(0, 0) = u(1, 1) = 1;
  u(2, 2) = u(3, 3) = -1;  // Z x 1 in the blocked index (i, j)
  a.physical_op = u;
  a.virtual_left = gates::Z();
  a.blocking = 2;
  return a;
}

inline SymmetryAction cluster_symmetry_second() {
  SymmetryAction a;
  a.label = "cluster Z(even)->X";
  Mat u = Mat::Zero(4, 4);
  u(0, 0) = u(2, 2) = 1;
  u(1, 1) = u(3, 3) = -1;  // 1 x Z
  a.physical_op = u;
  a.virtual_left = gates::X();
  a.blocking = 2;
  return a;
}

/// Spin-1 rotation exp(i theta n.L) in the adjoint (X, Y, Z) basis, with the
/// virtual representative exp(i theta n.sigma/2).
inline SymmetryAction aklt_rotation(double theta, const Eigen::Vector3d& axis) {
  Eigen::Vector3d n = axis.normalized();
  // (L_a)_{bc} = -i eps_{abc}
  auto eps = [](int a, int b, int c) -> double {
    if (a == b || b == c || a == c) return 0.0;
    int inversions = (a > b) + (a > c) + (b > c);
    return inversions % 2 == 0 ? 1.0 : -1.0;
  };
  Mat l = Mat::Zero(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) l(b, c) += cx(0, -1) * eps(a, b, c) * n(a);
  Eigen::SelfAdjointEigenSolver<Mat> es(l);
  Mat u = es.eigenvectors() *
          (cx(0, 1) * theta * es.eigenvalues().array()).exp().matrix().asDiagonal() *
          es.eigenvectors().adjoint();

  Mat pauli = n(0) * gates::X() + n(1) * gates::Y() + n(2) * gates::Z();
  Eigen::SelfAdjointEigenSolver<Mat> es2(pauli);
  Mat v = es2.eigenvectors() *
          (cx(0, -1) * (theta / 2.0) * es2.eigenvalues().array()).exp().matrix().asDiagonal() *
          es2.eigenvectors().adjoint();

  SymmetryAction a;
  a.label = "aklt SO(3) rotation";
  a.physical_op = u;
  a.virtual_left = v;
  a.blocking = 1;
  return a;
}

/// Cluster three-body action X_{k-1} Z_k X_{k+1} as a localized symmetry term.
inline SymmetryAction cluster_stabilizer_action() {
  SymmetryAction a;
  a.label = "cluster XZX";
  a.physical_op = gates::Z();
  a.virtual_left = gates::X();
  a.virtual_right = gates::X();
  a.blocking = 1;
  return a;
}

/// Ising two-body action realized as 1(k-1) X_k X_{k+1} in the same frame.
inline SymmetryAction ising_stabilizer_action() {
  SymmetryAction a;
  a.label = "ising XX";
  a.physical_op = gates::X();
  a.virtual_left = gates::X();
  a.virtual_right = gates::I2();
  a.blocking = 1;
  return a;
}

}  // namespace symqc

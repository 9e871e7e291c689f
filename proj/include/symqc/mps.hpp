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

#include "symqc/pauli.hpp"
#include "symqc/qmath.hpp"

namespace symqc {

/// A translation-invariant MPS site tensor: phys_dim matrices A_i on the
/// bond space, with a scalar normalization and open-boundary vectors.
struct SiteTensor {
  int phys_dim = 2;
  int bond_dim = 1;
  std::vector<Mat> ops;
  double normalization = 1.0;
  Vec left_boundary;
  Vec right_boundary;

  void validate() const {
    if (phys_dim != 2 && phys_dim != 3)
      throw std::invalid_argument("SiteTensor: phys_dim must be 2 or 3");
    if (static_cast<int>(ops.size()) != phys_dim)
      throw std::invalid_argument("SiteTensor: need one matrix per physical index");
    for (const Mat& a : ops)
      if (a.rows() != bond_dim || a.cols() != bond_dim)
        throw std::invalid_argument("SiteTensor: op shape mismatch");
    if (left_boundary.size() != bond_dim || right_boundary.size() != bond_dim)
      throw std::invalid_argument("SiteTensor: boundary shape mismatch");
    if (left_boundary.norm() < kOutcomeFloor || right_boundary.norm() < kOutcomeFloor)
      throw std::invalid_argument("SiteTensor: zero boundary vector");
  }

  static Vec uniform_boundary(int d) { return Vec::Constant(d, 1.0 / std::sqrt(double(d))); }

  static SiteTensor make(int phys, std::vector<Mat> a, double norm) {
    SiteTensor t;
    t.phys_dim = phys;
    t.bond_dim = static_cast<int>(a.front().rows());
    t.ops = std::move(a);
    t.normalization = norm;
    t.left_boundary = uniform_boundary(t.bond_dim);
    t.right_boundary = uniform_boundary(t.bond_dim);
    t.validate();
    return t;
  }
};

inline SiteTensor ghz_tensor() {
  return SiteTensor::make(2, {gates::I2(), gates::Z()}, 1.0 / std::sqrt(2.0));
}

inline SiteTensor cluster_tensor() {
  return SiteTensor::make(2, {gates::H(), gates::H() * gates::Z()}, 1.0 / std::sqrt(2.0));
}

inline SiteTensor aklt_tensor() {
  return SiteTensor::make(3, {gates::X(), gates::Y(), gates::Z()}, 1.0 / std::sqrt(3.0));
}

inline SiteTensor toric_tensor() {
  Mat i4 = Mat::Identity(4, 4);
  Mat zz = Mat::Zero(4, 4);
  zz(0, 0) = zz(3, 3) = 1;
  zz(1, 1) = zz(2, 2) = -1;
  return SiteTensor::make(2, {i4, zz}, 1.0 / std::sqrt(2.0));
}

/// Rank-1 product tensor generating |+>^n.
inline SiteTensor product_plus_tensor() {
  Mat one = Mat::Identity(1, 1);
  return SiteTensor::make(2, {one, one}, 1.0 / std::sqrt(2.0));
}

struct ChannelReport {
  bool is_trace_preserving = false;
  double defect = 0.0;
};

/// Trace-preservation defect of the tensor read as a channel:
/// || sum_i normalization^2 A_i^dag A_i - 1 ||.
inline ChannelReport channel_check(const SiteTensor& t) {
  t.validate();
  Mat acc = Mat::Zero(t.bond_dim, t.bond_dim);
  for (const Mat& a : t.ops) acc += (t.normalization * t.normalization) * (a.adjoint() * a);
  ChannelReport r;
  r.defect = (acc - Mat::Identity(t.bond_dim, t.bond_dim)).cwiseAbs().maxCoeff();
  r.is_trace_preserving = r.defect < kUnitaryTol;
  return r;
}

enum class Boundary { Open, Periodic };

namespace detail {

inline void contract_rec(const SiteTensor& t, int site, int n, Eigen::Index base, const Mat& acc,
                         Vec& out) {
  if (site == n) {
    out(base) = acc.trace();
    return;
  }
  for (int i = 0; i < t.phys_dim; ++i) {
    Mat next = acc * (t.normalization * t.ops[i]);
    contract_rec(t, site + 1, n, base * t.phys_dim + i, next, out);
  }
}

}  // namespace detail

/// Dense state with amplitudes <L|A_{i_1}...A_{i_n}|R> (open) or the trace
/// form (periodic), normalized at the end.
inline DenseState contract(const SiteTensor& t, int n, Boundary boundary = Boundary::Open) {
  t.validate();
  if (n < 2) throw std::invalid_argument("contract: need n >= 2");
  double log_dim = n * std::log2(double(t.phys_dim));
  if (log_dim > 20.0) throw std::invalid_argument("contract: dense dimension above 2^20");

  Eigen::Index dim = 1;
  for (int k = 0; k < n; ++k) dim *= t.phys_dim;
  Vec amps(dim);
  Mat seed;
  if (boundary == Boundary::Open)
    seed = t.right_boundary * t.left_boundary.adjoint();  // trace(R L^dag A...) = <L|A...|R>
  else
    seed = Mat::Identity(t.bond_dim, t.bond_dim);
  // Accumulate products left to right; the seed folds the boundaries into the trace.
  detail::contract_rec(t, 0, n, 0, seed, amps);
  return DenseState::from_vector(std::move(amps), std::vector<int>(n, t.phys_dim));
}

/// Completes the isometry |b> -> sum_i (norm A_i |b>) (x) |i> to a unitary on
/// bond (x) phys via QR.
inline Mat site_isometry_unitary(const SiteTensor& t) {
  auto rep = channel_check(t);
  if (!rep.is_trace_preserving)
    throw std::invalid_argument("site_isometry_unitary: tensor is not trace preserving");
  const int d = t.bond_dim, p = t.phys_dim, block = d * p;
  Mat w = Mat::Zero(block, block);
  for (int b = 0; b < d; ++b)
    for (int i = 0; i < p; ++i)
      for (int a = 0; a < d; ++a)
        // input (b, phys=0) column; output index a*p + i
        w(a * p + i, b * p + 0) = t.normalization * t.ops[i](a, b);
  // Gram-Schmidt the remaining columns against the isometry columns.
  Eigen::Index next = 0;
  for (int c = 0; c < block; ++c) {
    if (c % p == 0) continue;
    Vec v = Vec::Unit(block, next++);
    for (int tries = 0; tries < block + 1; ++tries) {
      Vec w2 = v;
      for (int c2 = 0; c2 < block; ++c2)
        if (c2 % p == 0 || c2 < c) w2 -= w.col(c2) * (w.col(c2).adjoint() * v)(0);
      if (w2.norm() > 1e-6) {
        w.col(c) = w2 / w2.norm();
        break;
      }
      v = Vec::Unit(block, next++ % block);
    }
  }
  if (!is_unitary(w)) throw std::runtime_error("site_isometry_unitary: completion failed");
  return w;
}

/// Prepares contract(t, n, Open) by a sequential ancilla circuit: the bond
/// register interacts once with each fresh site, right to left, and is then
/// projected onto the left boundary.
inline DenseState sequential_prepare(const SiteTensor& t, int n) {
  t.validate();
  if (n < 2) throw std::invalid_argument("sequential_prepare: need n >= 2");
  Mat w = site_isometry_unitary(t);

  std::vector<int> dims(n + 1, t.phys_dim);
  dims[0] = t.bond_dim;
  std::vector<int> digits(n + 1, 0);
  DenseState reg = DenseState::basis(dims, digits);
  // load |R> on the bond register
  Vec amps = Vec::Zero(reg.amps.size());
  Eigen::Index site_block = reg.total_dim() / t.bond_dim;
  for (int b = 0; b < t.bond_dim; ++b) amps(b * site_block) = t.right_boundary(b);
  reg.amps = std::move(amps);
  reg.normalize();

  for (int k = n; k >= 1; --k) apply_on_sites(reg, w, {0, k});

  // project the bond register onto <L|
  Mat basis = Mat::Identity(t.bond_dim, t.bond_dim);
  Vec l = t.left_boundary / t.left_boundary.norm();
  basis.col(0) = l;
  for (int c = 1; c < t.bond_dim; ++c) {
    Vec v = Vec::Unit(t.bond_dim, c - 1);
    for (int c2 = 0; c2 < c; ++c2) v -= basis.col(c2) * (basis.col(c2).adjoint() * v)(0);
    if (v.norm() < 1e-6) v = Vec::Unit(t.bond_dim, (c) % t.bond_dim);
    for (int c2 = 0; c2 < c; ++c2) v -= basis.col(c2) * (basis.col(c2).adjoint() * v)(0);
    basis.col(c) = v / v.norm();
  }
  auto mr = measure_forced(reg, 0, basis, 0);
  return mr.post;
}

/// Measurement basis on one physical leg: the computational basis tilted by
/// exp(-i tilt sigma_axis). Tilt 0 projects directly onto the tensor index.
struct BasisSpec {
  char axis = 'X';
  double tilt = 0.0;
};

inline Mat basis_matrix(const BasisSpec& spec, int phys_dim) {
  if (!std::isfinite(spec.tilt)) throw std::invalid_argument("basis_matrix: non-finite tilt");
  if (phys_dim == 2) {
    if (spec.axis == 'X') return gates::expiX(-spec.tilt);
    if (spec.axis == 'Z') return gates::expiZ(-spec.tilt);
    throw std::invalid_argument("basis_matrix: axis must be X or Z");
  }
  if (spec.tilt != 0.0)
    throw std::invalid_argument("basis_matrix: tilted bases need phys_dim 2");
  return Mat::Identity(phys_dim, phys_dim);
}

/// Kraus operator induced on the bond space by projecting one physical leg
/// onto basis column `outcome`.
inline Mat induced_kraus(const SiteTensor& t, const Mat& basis, int outcome) {
  Mat k = Mat::Zero(t.bond_dim, t.bond_dim);
  for (int i = 0; i < t.phys_dim; ++i)
    k += std::conj(basis(i, outcome)) * (t.normalization * t.ops[i]);
  return k;
}

struct WireMeasureResult {
  Mat logical_op;
  std::vector<int> outcomes;  // step order: site n first (emission order)
  ByproductFrame frame;
  double probability = 1.0;  // joint probability of the realized branch
};

/// Measures the physical legs of an n-site open chain one by one (site n
/// first, matching the sequential-emission order). The induced operator on
/// the bond space is the product of per-site Kraus factors; the returned
/// logical_op carries later steps on the left.
inline WireMeasureResult wire_measure_ops(const SiteTensor& t, int n,
                                          const std::vector<Mat>& bases,
                                          const std::vector<int>* forced_outcomes = nullptr,
                                          std::mt19937_64* rng = nullptr) {
  t.validate();
  if (static_cast<int>(bases.size()) != n)
    throw std::invalid_argument("wire_measure: need one basis per site");
  if (forced_outcomes && static_cast<int>(forced_outcomes->size()) != n)
    throw std::invalid_argument("wire_measure: forced outcome count mismatch");

  // Dense branch state over [left bond, phys sites, right bond].
  std::vector<int> dims;
  dims.push_back(t.bond_dim);
  for (int k = 0; k < n; ++k) dims.push_back(t.phys_dim);
  dims.push_back(t.bond_dim);
  Eigen::Index dim = t.bond_dim;
  for (int k = 0; k < n; ++k) dim *= t.phys_dim;
  dim *= t.bond_dim;
  if (dim > (Eigen::Index(1) << 22))
    throw std::invalid_argument("wire_measure: register too large");
  Vec amps(dim);
  Eigen::Index phys_dim_total = dim / (Eigen::Index(t.bond_dim) * t.bond_dim);
  for (Eigen::Index ph = 0; ph < phys_dim_total; ++ph) {
    Mat prod = Mat::Identity(t.bond_dim, t.bond_dim);
    Eigen::Index rem = ph;
    std::vector<int> idx(n);
    for (int k = n - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % t.phys_dim);
      rem /= t.phys_dim;
    }
    for (int k = 0; k < n; ++k) prod = prod * (t.normalization * t.ops[idx[k]]);
    for (int v = 0; v < t.bond_dim; ++v)
      for (int w2 = 0; w2 < t.bond_dim; ++w2)
        amps((Eigen::Index(v) * phys_dim_total + ph) * t.bond_dim + w2) = prod(v, w2);
  }
  DenseState reg = DenseState::from_vector(std::move(amps), dims);

  WireMeasureResult res;
  res.logical_op = Mat::Identity(t.bond_dim, t.bond_dim);
  res.outcomes.clear();
  Mat herald_free = Mat::Identity(t.bond_dim, t.bond_dim);  // product of outcome-0 factors
  for (int step = 0; step < n; ++step) {
    int site = n - 1 - step;  // 0-based chain site, measured right to left
    const Mat& basis = bases[step];
    if (basis.rows() != t.phys_dim || basis.cols() != t.phys_dim)
      throw std::invalid_argument("wire_measure: basis shape mismatch");
    std::optional<int> forced;
    if (forced_outcomes) forced = (*forced_outcomes)[step];
    auto mr = measure(reg, 1 + site, basis, forced, rng);
    reg = mr.post;
    res.outcomes.push_back(mr.outcome);
    res.probability *= mr.probability;
    res.logical_op = induced_kraus(t, basis, mr.outcome) * res.logical_op;
    herald_free = induced_kraus(t, basis, 0) * herald_free;
  }

  // Byproduct frame: meaningful when logical_op = herald_free * (phased Pauli).
  if (t.bond_dim == 2) {
    Mat residue = herald_free.inverse() * res.logical_op;
    for (int xb = 0; xb < 2 && true; ++xb)
      for (int zb = 0; zb < 2; ++zb) {
        PauliOp p(1);
        p.x[0] = xb;
        p.z[0] = zb;
        Mat pm = dense_matrix(p);
        cx ov = (pm.adjoint() * residue).trace() / 2.0;
        if (std::abs(ov) > 1e-8 && (residue - ov * pm).cwiseAbs().maxCoeff() < 1e-8) {
          res.frame.x_bit = xb;
          res.frame.z_bit = zb;
        }
      }
  }
  return res;
}

inline WireMeasureResult wire_measure(const SiteTensor& t, int n,
                                      const std::vector<BasisSpec>& bases,
                                      const std::vector<int>* forced_outcomes = nullptr,
                                      std::mt19937_64* rng = nullptr) {
  std::vector<Mat> mats;
  mats.reserve(bases.size());
  for (const auto& b : bases) mats.push_back(basis_matrix(b, t.phys_dim));
  return wire_measure_ops(t, n, mats, forced_outcomes, rng);
}

/// Smallest blocking length k <= k_max at which products A_{i_1}...A_{i_k}
/// span the full bond_dim^2 matrix space (numeric rank, threshold 1e-8).
inline std::optional<int> injectivity(const SiteTensor& t, int k_max = 6) {
  t.validate();
  if (k_max > 6) throw std::invalid_argument("injectivity: k_max above 6");
  const int d2 = t.bond_dim * t.bond_dim;
  std::vector<Mat> prods = {Mat::Identity(t.bond_dim, t.bond_dim)};
  for (int k = 1; k <= k_max; ++k) {
    std::vector<Mat> next;
    next.reserve(prods.size() * t.phys_dim);
    for (const Mat& m : prods)
      for (int i = 0; i < t.phys_dim; ++i) next.push_back(m * (t.normalization * t.ops[i]));
    prods = std::move(next);
    Mat stacked(static_cast<Eigen::Index>(prods.size()), d2);
    for (size_t r = 0; r < prods.size(); ++r)
      stacked.row(static_cast<Eigen::Index>(r)) =
          Eigen::Map<const Vec>(prods[r].data(), d2).transpose();
    Eigen::JacobiSVD<Mat> svd(stacked);
    int rank = 0;
    for (Eigen::Index s = 0; s < svd.singularValues().size(); ++s)
      if (svd.singularValues()(s) > 1e-8) ++rank;
    if (rank == d2) return k;
  }
  return std::nullopt;
}

/// Tensor with an explicit junk (x) logical factorization A_i = B_i (x) P_i.
struct FactorizedTensor {
  std::vector<Mat> junk_ops;
  std::vector<Mat> logical_ops;

  SiteTensor combined() const {
    if (junk_ops.size() != logical_ops.size() || junk_ops.empty())
      throw std::invalid_argument("FactorizedTensor: factor count mismatch");
    std::vector<Mat> a;
    for (size_t i = 0; i < junk_ops.size(); ++i) {
      const Mat& b = junk_ops[i];
      const Mat& p = logical_ops[i];
      Mat k(b.rows() * p.rows(), b.cols() * p.cols());
      for (Eigen::Index r = 0; r < b.rows(); ++r)
        for (Eigen::Index c = 0; c < b.cols(); ++c)
          k.block(r * p.rows(), c * p.cols(), p.rows(), p.cols()) = b(r, c) * p;
      a.push_back(std::move(k));
    }
    SiteTensor t = SiteTensor::make(static_cast<int>(a.size()), std::move(a),
                                    1.0 / std::sqrt(double(junk_ops.size())));
    return t;
  }
};

/// Nearest Kronecker factorization M ~ B (x) L via the SVD of the block
/// rearrangement; returns the defect ||M - B (x) L||.
inline double nearest_kronecker(const Mat& m, Eigen::Index bd, Eigen::Index ld, Mat& b, Mat& l) {
  if (m.rows() != bd * ld || m.cols() != bd * ld)
    throw std::invalid_argument("nearest_kronecker: shape mismatch");
  Mat r(bd * bd, ld * ld);
  for (Eigen::Index i = 0; i < bd; ++i)
    for (Eigen::Index j = 0; j < bd; ++j) {
      Mat blk = m.block(i * ld, j * ld, ld, ld);
      r.row(i * bd + j) = Eigen::Map<const Vec>(blk.data(), ld * ld).transpose();
    }
  Eigen::JacobiSVD<Mat> svd(r, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double s0 = svd.singularValues()(0);
  Vec u = svd.matrixU().col(0), v = svd.matrixV().col(0);
  b = Mat(bd, bd);
  for (Eigen::Index i = 0; i < bd; ++i)
    for (Eigen::Index j = 0; j < bd; ++j) b(i, j) = u(i * bd + j) * std::sqrt(s0);
  Mat lt(ld, ld);
  lt = Eigen::Map<const Mat>(v.data(), ld, ld).conjugate();
  l = lt * std::sqrt(s0);
  Mat approx(bd * ld, bd * ld);
  for (Eigen::Index i = 0; i < bd; ++i)
    for (Eigen::Index j = 0; j < bd; ++j) approx.block(i * ld, j * ld, ld, ld) = b(i, j) * l;
  return (m - approx).cwiseAbs().maxCoeff();
}

struct TiltedActionReport {
  Mat induced_op;
  Mat logical_factor;  // residual rotation after stripping the heralded Pauli
  Mat herald;          // the untilted logical Pauli of the chosen pair
  double defect = 0.0;
};

/// Single-site tilted measurement on a factorized tensor: the basis column
/// cos(e)|i> + s sin(e)|j> is chosen over index pairs and s in {1,-1,i,-i} so
/// that the induced operator approximates e^{i e P} times the heralded Pauli
/// on the logical factor, for P = sigma_axis.
inline TiltedActionReport logical_action_tilted(const FactorizedTensor& f, const BasisSpec& spec) {
  if (std::abs(spec.tilt) > 0.05)
    throw std::invalid_argument("logical_action_tilted: |tilt| above 0.05");
  Mat target = spec.axis == 'X' ? gates::X() : gates::Z();
  if (spec.axis != 'X' && spec.axis != 'Z')
    throw std::invalid_argument("logical_action_tilted: axis must be X or Z");
  const int p = static_cast<int>(f.logical_ops.size());
  const Eigen::Index ld = f.logical_ops.front().rows();
  const Eigen::Index bd = f.junk_ops.front().rows();
  const double norm = 1.0 / std::sqrt(double(p));
  const double ce = std::cos(spec.tilt), se = std::sin(spec.tilt);
  const cx svals[4] = {cx(1, 0), cx(-1, 0), cx(0, 1), cx(0, -1)};

  double best = -1.0;
  int bi = 0, bj = 1;
  cx bs = 1.0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      if (i == j) continue;
      Mat want = (cx(std::cos(spec.tilt), 0) * Mat::Identity(ld, ld) +
                  cx(0, std::sin(spec.tilt)) * target) *
                 f.logical_ops[i];
      for (cx s : svals) {
        Mat got = ce * f.logical_ops[i] + std::conj(s) * se * f.logical_ops[j];
        double err = (got - want).cwiseAbs().maxCoeff();
        if (best < 0 || err < best) {
          best = err;
          bi = i;
          bj = j;
          bs = s;
        }
      }
    }

  Mat k = Mat::Zero(bd * ld, bd * ld);
  auto kron = [&](const Mat& b, const Mat& l) {
    Mat out(bd * ld, bd * ld);
    for (Eigen::Index r = 0; r < bd; ++r)
      for (Eigen::Index c = 0; c < bd; ++c) out.block(r * ld, c * ld, ld, ld) = b(r, c) * l;
    return out;
  };
  k = ce * norm * kron(f.junk_ops[bi], f.logical_ops[bi]) +
      std::conj(bs) * se * norm * kron(f.junk_ops[bj], f.logical_ops[bj]);

  TiltedActionReport rep;
  rep.induced_op = k;
  Mat bfac, lfac;
  rep.defect = nearest_kronecker(k, bd, ld, bfac, lfac);
  rep.herald = f.logical_ops[bi];
  // strip scale and herald: the residual rotation should be close to unitary
  Mat resid = lfac * f.logical_ops[bi].inverse();
  cx det = resid.determinant();
  double scale = std::sqrt(std::abs(det));
  if (scale > kOutcomeFloor) resid /= scale;
  // fix the global phase against the expected rotation
  Mat expect = cx(std::cos(spec.tilt), 0) * Mat::Identity(ld, ld) +
               cx(0, std::sin(spec.tilt)) * target;
  cx ov = (expect.adjoint() * resid).trace();
  if (std::abs(ov) > kOutcomeFloor) resid *= std::conj(ov / std::abs(ov));
  rep.logical_factor = resid;
  return rep;
}

/// Plain-text serialization: header line, then one matrix per physical index
/// (row-major re im pairs), then the boundary vectors.
inline std::string serialize_tensor(const SiteTensor& t) {
  t.validate();
  std::ostringstream out;
  out.precision(17);
  out << "tensor " << t.phys_dim << ' ' << t.bond_dim << ' ' << t.normalization << '\n';
  for (const Mat& a : t.ops) {
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c)
        out << a(r, c).real() << ' ' << a(r, c).imag() << ((c + 1 < a.cols()) ? ' ' : '\n');
  }
  auto emit_vec = [&](const Vec& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
      out << v(i).real() << ' ' << v(i).imag() << ((i + 1 < v.size()) ? ' ' : '\n');
  };
  emit_vec(t.left_boundary);
  emit_vec(t.right_boundary);
  return out.str();
}

inline SiteTensor parse_tensor(const std::string& text) {
  std::istringstream in(text);
  std::string tag;
  SiteTensor t;
  if (!(in >> tag >> t.phys_dim >> t.bond_dim >> t.normalization) || tag != "tensor")
    throw std::invalid_argument("parse_tensor: bad header");
  auto read_cx = [&]() {
    double re, im;
    if (!(in >> re >> im)) throw std::invalid_argument("parse_tensor: truncated");
    return cx(re, im);
  };
  t.ops.assign(t.phys_dim, Mat::Zero(t.bond_dim, t.bond_dim));
  for (int i = 0; i < t.phys_dim; ++i)
    for (int r = 0; r < t.bond_dim; ++r)
      for (int c = 0; c < t.bond_dim; ++c) t.ops[i](r, c) = read_cx();
  t.left_boundary = Vec(t.bond_dim);
  t.right_boundary = Vec(t.bond_dim);
  for (int i = 0; i < t.bond_dim; ++i) t.left_boundary(i) = read_cx();
  for (int i = 0; i < t.bond_dim; ++i) t.right_boundary(i) = read_cx();
  t.validate();
  return t;
}

}  // namespace symqc

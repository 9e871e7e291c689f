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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqc/pauli.hpp"
#include "symqc/qmath.hpp"

using namespace symqc;

TEST_CASE("H on |0> gives |+>") {
  CircuitIR c{1, {{GateKind::H, {0}}}};
  auto out = apply_circuit(c, DenseState::zero_qubits(1));
  CHECK(fidelity(out, DenseState::plus_qubits(1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("CCZ on |+++> flips only the |111> amplitude") {
  CircuitIR c{3, {{GateKind::CCZ, {0, 1, 2}}}};
  auto out = apply_circuit(c, DenseState::plus_qubits(3));
  const double a = 1.0 / std::sqrt(8.0);
  for (int i = 0; i < 8; ++i) {
    double expected = (i == 7) ? -a : a;
    CHECK(std::abs(out.amps(i) - cx(expected, 0)) < 1e-12);
  }
}

TEST_CASE("CZ on |++> is the 2-qubit graph state (stabilizer check)") {
  CircuitIR c{2, {{GateKind::CZ, {0, 1}}}};
  auto out = apply_circuit(c, DenseState::plus_qubits(2));
  CHECK(std::abs(pauli_expectation(out, parse_pauli("+XZ")) - cx(1, 0)) < 1e-12);
  CHECK(std::abs(pauli_expectation(out, parse_pauli("+ZX")) - cx(1, 0)) < 1e-12);
}

TEST_CASE("apply_circuit rejects mismatched registers and spin-1 sites") {
  CircuitIR c{2, {{GateKind::H, {0}}}};
  CHECK_THROWS(apply_circuit(c, DenseState::zero_qubits(3)));
  DenseState spin1 = DenseState::basis({2, 3}, {0, 0});
  CircuitIR c2{2, {{GateKind::H, {0}}}};
  CHECK_THROWS(apply_circuit(c2, spin1));
}

TEST_CASE("measure: |0> in Z basis is deterministic") {
  auto r = measure_forced(DenseState::zero_qubits(1), 0, Mat::Identity(2, 2), 0);
  CHECK(r.outcome == 0);
  CHECK(r.probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measure: |+> in Z basis is unbiased") {
  auto s = DenseState::plus_qubits(1);
  auto r0 = measure_forced(s, 0, Mat::Identity(2, 2), 0);
  auto r1 = measure_forced(s, 0, Mat::Identity(2, 2), 1);
  CHECK(r0.probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r1.probability == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("measure: Bell pair X measurement leaves |+> on the partner") {
  Vec v = Vec::Zero(4);
  v(0) = v(3) = 1 / std::sqrt(2.0);
  DenseState phi({2, 2}, v);
  auto r = measure_forced(phi, 0, gates::H(), 0);
  CHECK(r.probability == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fidelity(r.post, DenseState::plus_qubits(1)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("measure: forcing a zero-probability outcome throws") {
  CHECK_THROWS(measure_forced(DenseState::zero_qubits(1), 0, Mat::Identity(2, 2), 1));
}

TEST_CASE("measure with retained site keeps the product factor") {
  auto s = DenseState::plus_qubits(2);
  auto r = measure(s, 0, gates::H(), 0, nullptr, /*remove=*/false);
  CHECK(r.post.num_sites() == 2);
  CHECK(fidelity(r.post, DenseState::plus_qubits(2)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fidelity basics") {
  auto zero = DenseState::zero_qubits(1);
  auto one = DenseState::basis({2}, {1});
  auto plus = DenseState::plus_qubits(1);
  CHECK(fidelity(zero, zero) == doctest::Approx(1.0));
  CHECK(fidelity(zero, one) == doctest::Approx(0.0));
  CHECK(fidelity(zero, plus) == doctest::Approx(0.5));
  CHECK_THROWS(fidelity(zero, DenseState::zero_qubits(2)));
}

TEST_CASE("fidelity ignores global phase") {
  std::mt19937_64 rng(5);
  auto a = random_qubit_state(3, rng);
  DenseState b = a;
  b.amps *= std::polar(1.0, 1.234);
  CHECK(fidelity(a, b) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random circuits preserve norm") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (int trial = 0; trial < 5; ++trial) {
    int n = 4 + trial;
    CircuitIR c{n, {}};
    std::uniform_int_distribution<int> wire(0, n - 1);
    for (int d = 0; d < 20; ++d) {
      switch (pick(rng)) {
        case 0: c.gates.push_back({GateKind::H, {wire(rng)}}); break;
        case 1: c.gates.push_back({GateKind::T, {wire(rng)}}); break;
        case 2: c.gates.push_back({GateKind::RZ, {wire(rng)}, ang(rng)}); break;
        case 3: c.gates.push_back({GateKind::RX, {wire(rng)}, ang(rng)}); break;
        default: {
          int a = wire(rng), b = wire(rng);
          if (a == b) b = (b + 1) % n;
          c.gates.push_back({GateKind::CZ, {a, b}});
        }
      }
    }
    auto out = apply_circuit(c, random_qubit_state(n, rng));
    CHECK(std::abs(out.norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("measurement branches reconstruct the premeasurement weights") {
  std::mt19937_64 rng(23);
  auto s = random_qubit_state(4, rng);
  for (int site = 0; site < 4; ++site) {
    double total = 0;
    Mat dm = Mat::Zero(8, 8);
    for (int o = 0; o < 2; ++o) {
      auto r = measure_forced(s, site, gates::H(), o);
      total += r.probability;
      dm += r.probability * (r.post.amps * r.post.amps.adjoint());
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    // the outcome-averaged density matrix is the partial trace over `site`
    DenseState rot = s;
    Mat ref = Mat::Zero(8, 8);
    for (int o = 0; o < 2; ++o) {
      DenseState tmp = s;
      apply_on_sites(tmp, gates::H().adjoint(), {site});
      Eigen::Index stride = s.stride(site);
      Vec branch(8);
      Eigen::Index j = 0;
      for (Eigen::Index i = 0; i < 16; ++i)
        if ((i / stride) % 2 == o) branch(j++) = tmp.amps(i);
      ref += branch * branch.adjoint();
    }
    CHECK((dm - ref).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("circuit text IR round-trips") {
  std::string text = "H 0\nRZ 1 0.785398\nCZ 0 1\nCCZ 0 1 2\n";
  auto c = parse_circuit(text);
  CHECK(c.num_wires == 3);
  CHECK(c.gates.size() == 4);
  CHECK(emit_circuit(c) == text);
  CHECK_THROWS(parse_circuit("BOGUS 0\n"));
}

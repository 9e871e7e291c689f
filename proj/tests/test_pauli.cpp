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

using namespace symqc;

namespace {

PauliOp random_pauli(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> bit(0, 1), ph(0, 3);
  PauliOp p(n);
  for (int j = 0; j < n; ++j) {
    p.x[j] = bit(rng);
    p.z[j] = bit(rng);
  }
  p.phase_exp = ph(rng);
  return p;
}

}  // namespace

TEST_CASE("X·Z = -iY") {
  auto r = multiply(parse_pauli("+X"), parse_pauli("+Z"));
  CHECK(r.x[0] == 1);
  CHECK(r.z[0] == 1);
  CHECK(r.phase_exp == 0);  // XZ = -iY in the Y = iXZ convention
  CHECK(format_pauli(r) == "-iY");
  CHECK((dense_matrix(r) - gates::X() * gates::Z()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("p·p^{-1} is the identity with phase +1") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto p = random_pauli(4, rng);
    auto prod = multiply(p, inverse(p));
    CHECK(prod.is_identity_bits());
    CHECK(prod.phase_exp == 0);
  }
}

TEST_CASE("symplectic commutation matches phase comparison") {
  auto p = parse_pauli("+XZ"), q = parse_pauli("+ZX");
  CHECK(commutes(p, q));
  CHECK(multiply(p, q) == multiply(q, p));
  CHECK_FALSE(commutes(parse_pauli("+X"), parse_pauli("+Z")));
}

TEST_CASE("multiply is associative and matches dense matrices") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    auto a = random_pauli(3, rng), b = random_pauli(3, rng), c = random_pauli(3, rng);
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
  for (int t = 0; t < 25; ++t) {
    auto a = random_pauli(2, rng), b = random_pauli(2, rng);
    Mat lhs = dense_matrix(multiply(a, b));
    Mat rhs = dense_matrix(a) * dense_matrix(b);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("canonicalize is order- and product-invariant") {
  StabilizerGroup g1{2, {parse_pauli("+XX"), parse_pauli("+ZZ")}};
  StabilizerGroup g2{2, {parse_pauli("+ZZ"), parse_pauli("+XX")}};
  StabilizerGroup g3{2, {parse_pauli("+XX"), multiply(parse_pauli("+XX"), parse_pauli("+ZZ"))}};
  auto c1 = canonicalize(g1), c2 = canonicalize(g2), c3 = canonicalize(g3);
  CHECK(c1 == c2);
  CHECK(c1 == c3);
}

TEST_CASE("canonicalize is idempotent") {
  StabilizerGroup g{3, {parse_pauli("+XZI"), parse_pauli("+ZXZ"), parse_pauli("+IZX")}};
  auto c = canonicalize(g);
  auto c2 = canonicalize(StabilizerGroup{3, c});
  CHECK(c == c2);
}

TEST_CASE("canonicalize of the empty group is empty") {
  CHECK(canonicalize(StabilizerGroup{3, {}}).empty());
}

TEST_CASE("canonicalize rejects dependent and anticommuting inputs") {
  CHECK_THROWS(canonicalize(StabilizerGroup{2, {parse_pauli("+XX"), parse_pauli("+XX")}}));
  CHECK_THROWS(canonicalize(StabilizerGroup{1, {parse_pauli("+X"), parse_pauli("+Z")}}));
}

TEST_CASE("canonicalize survives random reshuffling and recombination") {
  std::mt19937_64 rng(19);
  StabilizerGroup g{4,
                    {parse_pauli("+XZII"), parse_pauli("+ZXZI"), parse_pauli("+IZXZ"),
                     parse_pauli("+IIZX")}};
  auto ref = canonicalize(g);
  for (int t = 0; t < 20; ++t) {
    auto gens = g.generators;
    std::shuffle(gens.begin(), gens.end(), rng);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    for (int m = 0; m < 4; ++m) {
      size_t a = pick(rng), b = pick(rng);
      if (a != b) gens[a] = multiply(gens[a], gens[b]);
    }
    CHECK(canonicalize(StabilizerGroup{4, gens}) == ref);
  }
}

TEST_CASE("graph_state_group: path on 3 vertices") {
  std::vector<std::vector<uint8_t>> adj = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
  auto g = graph_state_group(adj);
  REQUIRE(g.generators.size() == 3);
  CHECK(format_pauli(g.generators[0]) == "+XZI");
  CHECK(format_pauli(g.generators[1]) == "+ZXZ");
  CHECK(format_pauli(g.generators[2]) == "+IZX");
  // each generator stabilizes the CZ-built chain state
  CircuitIR c{3, {{GateKind::CZ, {0, 1}}, {GateKind::CZ, {1, 2}}}};
  auto state = apply_circuit(c, DenseState::plus_qubits(3));
  for (const auto& k : g.generators)
    CHECK(std::abs(pauli_expectation(state, k) - cx(1, 0)) < 1e-12);
}

TEST_CASE("graph_state_group: single vertex and 4-cycle") {
  auto g1 = graph_state_group({{0}});
  CHECK(format_pauli(g1.generators[0]) == "+X");

  std::vector<std::vector<uint8_t>> cyc(4, std::vector<uint8_t>(4, 0));
  for (int i = 0; i < 4; ++i) cyc[i][(i + 1) % 4] = cyc[(i + 1) % 4][i] = 1;
  auto g = graph_state_group(cyc);
  CircuitIR c{4, {}};
  for (int i = 0; i < 4; ++i) c.gates.push_back({GateKind::CZ, {i, (i + 1) % 4}});
  auto state = apply_circuit(c, DenseState::plus_qubits(4));
  CHECK(fidelity(stabilized_state(g), state) == doctest::Approx(1.0).epsilon(1e-10));

  CHECK_THROWS(graph_state_group({{0, 1}, {0, 0}}));
}

TEST_CASE("graph groups on small random graphs have full rank and a unique fixed state") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int t = 0; t < 10; ++t) {
    int n = 3 + t % 4;
    std::vector<std::vector<uint8_t>> adj(n, std::vector<uint8_t>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) adj[a][b] = adj[b][a] = bit(rng);
    auto g = graph_state_group(adj);
    CHECK(symplectic_rank(g) == n);
    auto s = stabilized_state(g);  // throws unless the +1 eigenspace is 1D
    CHECK(std::abs(s.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("ch_level on named gates") {
  CHECK(ch_level(dense_matrix(parse_pauli("+X")), 1).level == 1);
  CHECK(ch_level(dense_matrix(parse_pauli("+Y")), 1).level == 1);
  CHECK(ch_level(dense_matrix(parse_pauli("+Z")), 1).level == 1);
  CHECK(ch_level(gates::H(), 1).level == 2);
  CHECK(ch_level(gates::S(), 1).level == 2);
  CHECK(ch_level(gates::CZ(), 2).level == 2);
  CHECK(ch_level(gates::CNOT(), 2).level == 2);
  CHECK(ch_level(gates::T(), 1).level == 3);
  CHECK(ch_level(gates::CCZ(), 3).level == 3);
}

TEST_CASE("ch_level flags gates above k_max") {
  Mat sqrt_t = Mat::Zero(2, 2);
  sqrt_t(0, 0) = 1;
  sqrt_t(1, 1) = std::polar(1.0, M_PI / 8);
  CHECK(ch_level(sqrt_t, 1).above_kmax);
  CHECK(ch_level(gates::T(), 1, 2).above_kmax);
}

TEST_CASE("ch_level invariance under global phase and Pauli conjugation") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  for (const Mat& u : {gates::H(), gates::T(), dense_matrix(parse_pauli("+X"))}) {
    int base = ch_level(u, 1).level;
    Mat phased = std::polar(1.0, ang(rng)) * u;
    CHECK(ch_level(phased, 1).level == base);
    for (const char* p : {"+X", "+Y", "+Z"}) {
      Mat m = dense_matrix(parse_pauli(p));
      CHECK(ch_level(m * u * m.adjoint(), 1).level == base);
    }
  }
}

TEST_CASE("ch_level rejects non-unitary input") {
  Mat bad = Mat::Ones(2, 2);
  CHECK_THROWS(ch_level(bad, 1));
}

TEST_CASE("group serialization round-trips") {
  StabilizerGroup g{3, {parse_pauli("+XZI"), parse_pauli("-ZXZ"), parse_pauli("+IZX")}};
  auto text = serialize_group(g);
  auto back = parse_group(text);
  CHECK(canonicalize(back) == canonicalize(g));
  CHECK(serialize_group(back) == text);
}

TEST_CASE("membership solve") {
  StabilizerGroup g{2, {parse_pauli("+XX"), parse_pauli("+ZZ")}};
  auto c = canonicalize(g);
  CHECK(contains(c, parse_pauli("+XX")));
  CHECK(contains(c, multiply(parse_pauli("+XX"), parse_pauli("+ZZ"))));
  CHECK_FALSE(contains(c, parse_pauli("-XX")));
  CHECK(membership_phase(c, parse_pauli("-XX")).value() == 2);
  CHECK_FALSE(membership_phase(c, parse_pauli("+XI")).has_value());
}

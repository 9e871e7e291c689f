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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "symqc/gauging.hpp"
#include "symqc/golden.hpp"
#include "symqc/mbqc.hpp"
#include "symqc/pauli.hpp"
#include "symqc/symmetry.hpp"
#include "symqc/teleport.hpp"

using namespace symqc;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

/// Report accumulator: metrics carry their tolerance, flags drive the exit
/// code, and the JSON is emitted with sorted keys for byte determinism.
struct Report {
  json j;
  bool ok = true;
  std::string failing;

  explicit Report(const std::string& command) {
    j["command"] = command;
    j["version"] = kVersion;
    j["golden_hashes"]["hyper_teleport_circuit"] = hex64(fnv1a(golden::kHyperTeleportCircuit));
    j["golden_hashes"]["mbqc_byproduct_rules"] = hex64(fnv1a(kByproductRules));
  }
  void param(const std::string& name, const json& v) { j["params"][name] = v; }
  void metric(const std::string& name, double value, double tol) {
    j["metrics"][name]["value"] = value;
    j["metrics"][name]["tolerance"] = tol;
  }
  void flag(const std::string& name, bool pass) {
    j["pass"][name] = pass;
    if (!pass && ok) {
      ok = false;
      failing = name;
    }
  }
  int finish(const std::string& out_path) {
    j["ok"] = ok;
    std::string text = j.dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "cannot open --out path: " << out_path << "\n";
        return 1;
      }
      out << text;
    }
    if (ok)
      std::cerr << j["command"].get<std::string>() << ": all checks passed\n";
    else
      std::cerr << j["command"].get<std::string>() << ": FAILED metric " << failing << "\n";
    return ok ? 0 : 2;
  }
};

std::vector<int> parse_forced(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

uint64_t default_seed() {
  const char* env = std::getenv("SYMQC_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 0;
}

int run_teleport(const std::string& variant, int trials, uint64_t seed, const std::string& out) {
  Report rep("teleport");
  rep.param("variant", variant);
  rep.param("trials", trials);
  rep.param("seed", seed);
  TeleportVariant v;
  int bits;
  if (variant == "bell") {
    v = TeleportVariant::Bell;
    bits = 2;
  } else if (variant == "one_bit_z") {
    v = TeleportVariant::OneBitZ;
    bits = 1;
  } else if (variant == "one_bit_x") {
    v = TeleportVariant::OneBitX;
    bits = 1;
  } else {
    std::cerr << "unknown variant: " << variant << "\n";
    return 1;
  }
  std::mt19937_64 rng(seed);
  double min_fid = 1.0;
  for (int t = 0; t < trials; ++t) {
    DenseState psi = random_qubit_state(1, rng);
    for (int mask = 0; mask < (1 << bits); ++mask) {
      std::vector<int> forced;
      for (int k = 0; k < bits; ++k) forced.push_back((mask >> k) & 1);
      auto res = teleport(psi, v, forced);
      min_fid = std::min(min_fid, fidelity(apply_frame_correction(res.raw_output, res.frame), psi));
    }
  }
  rep.metric("min_corrected_fidelity", min_fid, 1e-10);
  rep.flag("corrected_fidelity", min_fid >= 1.0 - 1e-10);
  return rep.finish(out);
}

int run_hyper(int trials, int max_ccz, uint64_t seed, const std::string& out) {
  Report rep("hyper");
  rep.param("trials", trials);
  rep.param("max_ccz", max_ccz);
  rep.param("seed", seed);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  bool parity_only = true;
  for (int t = 0; t < trials; ++t) {
    DenseState psi = random_qubit_state(1, rng);
    DenseState even = hyper_teleport_reference(psi, 0, 0, 0);
    DenseState odd = hyper_teleport_reference(psi, 1, 0, 0);
    for (int abc = 0; abc < 8; ++abc) {
      int a = abc & 1, b = (abc >> 1) & 1, c = (abc >> 2) & 1;
      DenseState got = hyper_teleport_reference(psi, a, b, c);
      const DenseState& want = ((a ^ b ^ c) ? odd : even);
      double diff = (got.amps - want.amps).norm();
      worst = std::max(worst, diff);
      if (diff > 1e-10) parity_only = false;
    }
  }
  rep.metric("max_parity_class_deviation", worst, 1e-10);
  rep.flag("reference_parity_only", parity_only);
  bool swapped = false;
  auto circuit = search_hyper_teleport_circuit(max_ccz, &swapped);
  rep.flag("circuit_found", circuit.has_value());
  return rep.finish(out);
}

int run_ch(const std::string& gate, const std::string& out) {
  Report rep("ch");
  rep.param("gate", gate);
  Mat u;
  int n = 1;
  if (gate == "X")
    u = gates::X();
  else if (gate == "Y")
    u = gates::Y();
  else if (gate == "Z")
    u = gates::Z();
  else if (gate == "H")
    u = gates::H();
  else if (gate == "S")
    u = gates::S();
  else if (gate == "T")
    u = gates::T();
  else if (gate == "CZ")
    u = gates::CZ(), n = 2;
  else if (gate == "CNOT")
    u = gates::CNOT(), n = 2;
  else if (gate == "SWAP")
    u = gates::SWAP(), n = 2;
  else if (gate == "CCZ")
    u = gates::CCZ(), n = 3;
  else {
    std::cerr << "unknown gate: " << gate << "\n";
    return 1;
  }
  auto lvl = ch_level(u, n);
  rep.j["metrics"]["level"]["value"] = lvl.level;
  rep.flag("classified", !lvl.above_kmax);
  return rep.finish(out);
}

SiteTensor named_tensor(const std::string& name) {
  if (name == "ghz") return ghz_tensor();
  if (name == "cluster") return cluster_tensor();
  if (name == "aklt") return aklt_tensor();
  if (name == "toric") return toric_tensor();
  if (name == "product_plus") return product_plus_tensor();
  throw CLI::ValidationError("--tensor", "unknown tensor: " + name);
}

int run_tensor(const std::string& name, int n, const std::string& out) {
  Report rep("tensor");
  rep.param("tensor", name);
  rep.param("n", n);
  auto t = named_tensor(name);
  auto c = contract(t, n);
  auto s = sequential_prepare(t, n);
  double fid = fidelity(c, s);
  rep.metric("contract_vs_sequential_fidelity", fid, 1e-9);
  rep.flag("preparation_equivalence", fid >= 1.0 - 1e-9);
  auto inj = injectivity(t);
  rep.j["metrics"]["injectivity"]["value"] = inj ? json(*inj) : json(nullptr);
  auto chan = channel_check(t);
  rep.metric("channel_defect", chan.defect, 1e-10);
  rep.flag("channel", chan.is_trace_preserving);
  return rep.finish(out);
}

int run_symmetry(int trials, uint64_t seed, const std::string& out) {
  Report rep("symmetry");
  rep.param("trials", trials);
  rep.param("seed", seed);
  double ghz = global_residual(ghz_tensor(), ghz_symmetry());
  double c1 = global_residual(cluster_tensor(), cluster_symmetry_first());
  double c2 = global_residual(cluster_tensor(), cluster_symmetry_second());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double aklt = 0.0;
  for (int t = 0; t < trials; ++t) {
    Eigen::Vector3d axis(unit(rng), unit(rng), unit(rng));
    if (axis.norm() < 1e-3) axis = Eigen::Vector3d(0, 0, 1);
    double theta = M_PI * unit(rng);
    aklt = std::max(aklt, global_residual(aklt_tensor(), aklt_rotation(theta, axis)));
  }
  rep.metric("ghz_residual", ghz, 1e-12);
  rep.metric("cluster_first_residual", c1, 1e-12);
  rep.metric("cluster_second_residual", c2, 1e-12);
  rep.metric("aklt_max_residual", aklt, 1e-10);
  rep.flag("ghz", ghz < 1e-12);
  rep.flag("cluster", c1 < 1e-12 && c2 < 1e-12);
  rep.flag("aklt", aklt < 1e-10);
  cx cpair = projective_phase(cluster_symmetry_first().virtual_left,
                              cluster_symmetry_second().virtual_left);
  cx gpair = projective_phase(ghz_symmetry().virtual_left, ghz_symmetry().virtual_left);
  rep.metric("cluster_projective_phase", cpair.real(), 1e-12);
  rep.metric("ghz_projective_phase", gpair.real(), 1e-12);
  rep.flag("projective_phases",
           std::abs(cpair - cx(-1, 0)) < 1e-12 && std::abs(gpair - cx(1, 0)) < 1e-12);
  return rep.finish(out);
}

int run_gauge1d(int n, const std::string& out) {
  Report rep("gauge1d");
  rep.param("n", n);
  auto g = gauge_1d(n);
  double worst = 1.0;
  for (double e : g.ghz_expectations) worst = std::min(worst, e);
  for (double e : g.cluster_expectations) worst = std::min(worst, e);
  rep.metric("min_stabilizer_expectation", worst, 1e-10);
  rep.flag("ghz_satisfies_ising", g.ghz_check);
  rep.flag("cluster_satisfies_gauged", g.cluster_check);
  rep.flag("symmetry_survives", g.symmetry_map);
  return rep.finish(out);
}

int run_gauge2d(int L, const std::string& out) {
  Report rep("gauge2d");
  rep.param("L", L);
  auto res = gauge_2d(L);
  auto lhs = canonicalize(res.group);
  auto rhs = canonicalize(hadamard_dual(cluster_2d_group(2 * L)));
  bool equal = lhs.size() == rhs.size();
  for (size_t k = 0; equal && k < lhs.size(); ++k) equal = lhs[k] == rhs[k];
  rep.flag("group_equals_cluster", equal);
  rep.flag("stage1_product_identity", res.stage1_product_identity);
  rep.flag("stage1_commuting", res.stage1_commuting);
  auto lines = line_symmetry_report(res.group, res.lattice);
  bool z_in = !lines.empty(), x_non = !lines.empty();
  for (const auto& l : lines) {
    z_in = z_in && l.z_line_in_group;
    x_non = x_non && !l.x_line_commutes;
  }
  rep.j["metrics"]["line_count"]["value"] = lines.size();
  rep.flag("z_lines_in_group", z_in);
  rep.flag("x_lines_noncommuting", x_non);
  return rep.finish(out);
}

int run_toric(int L, const std::string& out) {
  Report rep("toric");
  rep.param("L", L);
  auto tc = toric_code(L);
  bool commuting = true;
  for (size_t a = 0; a < tc.group.generators.size(); ++a)
    for (size_t b = a + 1; b < tc.group.generators.size(); ++b)
      commuting = commuting && commutes(tc.group.generators[a], tc.group.generators[b]);
  int rank = symplectic_rank(tc.group);
  int logical_dim = 1 << (tc.group.n - rank);
  rep.j["metrics"]["qubits"]["value"] = tc.group.n;
  rep.j["metrics"]["rank"]["value"] = rank;
  rep.j["metrics"]["logical_dimension"]["value"] = logical_dim;
  rep.flag("commuting", commuting);
  rep.flag("logical_dimension_four", logical_dim == 4);
  return rep.finish(out);
}

int run_mbqc(const std::string& circuit_path, int trials, uint64_t seed,
             const std::string& forced_csv, const std::string& out) {
  Report rep("mbqc");
  rep.param("trials", trials);
  rep.param("seed", seed);
  std::mt19937_64 rng(seed);
  if (!circuit_path.empty()) {
    rep.param("circuit", circuit_path);
    std::ifstream in(circuit_path);
    if (!in) {
      std::cerr << "cannot open circuit file: " << circuit_path << "\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    auto circuit = parse_circuit(buf.str());
    auto pat = compile(circuit);
    rep.j["pattern"] = json::parse(pattern_json(pat));
    if (!forced_csv.empty()) {
      auto forced = parse_forced(forced_csv);
      DenseState psi = random_qubit_state(circuit.num_wires, rng);
      auto run = execute(pat, psi, &forced);
      rep.j["metrics"]["branch_probability"]["value"] = run.probability;
      json frames = json::array();
      for (const auto& f : run.frames) frames.push_back({{"x", f.x_bit}, {"z", f.z_bit}});
      rep.j["frames"] = frames;
      double fid = fidelity(correct_frames(run.output, run.frames), apply_circuit(circuit, psi));
      rep.metric("corrected_fidelity", fid, 1e-9);
      rep.flag("corrected_fidelity", fid >= 1.0 - 1e-9);
      return rep.finish(out);
    }
    auto cmp = simulate_and_compare(circuit, trials, rng());
    rep.metric("min_corrected_fidelity", cmp.min_fidelity, 1e-9);
    rep.metric("mean_corrected_fidelity", cmp.mean_fidelity, 1e-9);
    rep.flag("corrected_fidelity", cmp.min_fidelity >= 1.0 - 1e-9);
    return rep.finish(out);
  }
  // random sweep: seeded circuits over {H, RZ, RX, CZ} on two wires
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  double min_fid = 1.0;
  for (int t = 0; t < trials; ++t) {
    CircuitIR c{2, {}};
    for (int d = 0; d < 4; ++d) {
      switch (pick(rng)) {
        case 0:
          c.gates.push_back({GateKind::H, {pick(rng) % 2}, 0.0});
          break;
        case 1:
          c.gates.push_back({GateKind::RZ, {pick(rng) % 2}, ang(rng)});
          break;
        case 2:
          c.gates.push_back({GateKind::RX, {pick(rng) % 2}, ang(rng)});
          break;
        default:
          c.gates.push_back({GateKind::CZ, {0, 1}, 0.0});
      }
    }
    auto cmp = simulate_and_compare(c, 3, rng());
    min_fid = std::min(min_fid, cmp.min_fidelity);
  }
  rep.metric("min_corrected_fidelity", min_fid, 1e-9);
  rep.flag("corrected_fidelity", min_fid >= 1.0 - 1e-9);
  return rep.finish(out);
}

int run_aklt(int n, const std::string& axes, uint64_t seed, const std::string& forced_csv,
             const std::string& out) {
  Report rep("aklt");
  rep.param("n", n);
  rep.param("axes", axes);
  rep.param("seed", seed);
  if (static_cast<int>(axes.size()) != n) {
    std::cerr << "--axes must give one of XYZ per site\n";
    return 1;
  }
  std::vector<BasisSpec> bases;
  for (char a : axes) bases.push_back({a, 0.0});
  std::optional<std::vector<int>> forced;
  if (!forced_csv.empty()) forced = parse_forced(forced_csv);
  std::mt19937_64 rng(seed);
  auto res = aklt_logical_run(n, bases, forced ? &*forced : nullptr, forced ? nullptr : &rng);
  std::string herald;
  for (const auto& [o, label] : res.herald.entries) herald.push_back(label);
  rep.j["metrics"]["herald"]["value"] = herald;
  rep.j["metrics"]["branch_probability"]["value"] = res.probability;
  double residual =
      (herald_product(res.herald).adjoint() * res.logical - Mat::Identity(2, 2))
          .cwiseAbs()
          .maxCoeff();
  rep.metric("herald_residual", residual, 1e-10);
  rep.flag("herald_matches_logical", residual < 1e-10);
  return rep.finish(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symqc: simulator-and-verifier toolkit for teleportation, MPS wires and gauging"};
  app.require_subcommand(1);

  uint64_t seed = default_seed();
  int trials = 100, n = 6, L = 2, max_ccz = 4;
  std::string out, variant = "bell", gate = "T", tensor = "ghz", circuit, forced, axes = "ZZZ";

  auto* tele = app.add_subcommand("teleport", "teleportation branch sweep");
  tele->add_option("--variant", variant, "bell|one_bit_z|one_bit_x");
  tele->add_option("--trials", trials);
  tele->add_option("--seed", seed);
  tele->add_option("--out", out);

  auto* hyper = app.add_subcommand("hyper", "hyper-teleportation reference and reconstruction");
  hyper->add_option("--trials", trials);
  hyper->add_option("--max-ccz", max_ccz);
  hyper->add_option("--seed", seed);
  hyper->add_option("--out", out);

  auto* ch = app.add_subcommand("ch", "Clifford-hierarchy level of a named gate");
  ch->add_option("--gate", gate, "X|Y|Z|H|S|T|CZ|CNOT|SWAP|CCZ");
  ch->add_option("--out", out);

  auto* tens = app.add_subcommand("tensor", "tensor preparation equivalence and injectivity");
  tens->add_option("--tensor", tensor, "ghz|cluster|aklt|toric|product_plus");
  tens->add_option("--n", n);
  tens->add_option("--out", out);

  auto* sym = app.add_subcommand("symmetry", "symmetry residuals and projective phases");
  sym->add_option("--trials", trials);
  sym->add_option("--seed", seed);
  sym->add_option("--out", out);

  auto* g1 = app.add_subcommand("gauge1d", "Ising-to-cluster gauging checks");
  g1->add_option("--n", n);
  g1->add_option("--out", out);

  auto* g2 = app.add_subcommand("gauge2d", "toric-to-cluster two-stage gauging checks");
  g2->add_option("--L", L);
  g2->add_option("--out", out);

  auto* tor = app.add_subcommand("toric", "toric-code stabilizer checks");
  tor->add_option("--L", L);
  tor->add_option("--out", out);

  auto* mb = app.add_subcommand("mbqc", "pattern compiler versus the dense oracle");
  mb->add_option("--circuit", circuit, "text-IR circuit file");
  mb->add_option("--trials", trials);
  mb->add_option("--seed", seed);
  mb->add_option("--forced-outcomes", forced, "comma-separated branch selection");
  mb->add_option("--out", out);

  auto* ak = app.add_subcommand("aklt", "heralded logical gates on the AKLT wire");
  ak->add_option("--n", n);
  ak->add_option("--axes", axes, "one of XYZ per site");
  ak->add_option("--seed", seed);
  ak->add_option("--forced-outcomes", forced, "comma-separated outcomes in {0,1,2}");
  ak->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (tele->parsed()) return run_teleport(variant, trials, seed, out);
    if (hyper->parsed()) return run_hyper(std::min(trials, 50), max_ccz, seed, out);
    if (ch->parsed()) return run_ch(gate, out);
    if (tens->parsed()) return run_tensor(tensor, n, out);
    if (sym->parsed()) return run_symmetry(std::min(trials, 50), seed, out);
    if (g1->parsed()) return run_gauge1d(n, out);
    if (g2->parsed()) return run_gauge2d(L, out);
    if (tor->parsed()) return run_toric(L, out);
    if (mb->parsed()) return run_mbqc(circuit, std::min(trials, 100), seed, forced, out);
    if (ak->parsed()) {
      if (!ak->count("--axes")) axes = std::string(n, 'Z');
      return run_aklt(n, axes, seed, forced, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

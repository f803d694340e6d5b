// Copyright 2026 The symprep Authors
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

#include "symprep/harness/catalog.hpp"

#include <bit>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "symprep/core/library.hpp"
#include "symprep/core/matrices.hpp"
#include "symprep/harness/grid.hpp"
#include "symprep/prim/adjust.hpp"
#include "symprep/prim/amplify.hpp"
#include "symprep/prim/controlled.hpp"
#include "symprep/prim/hamming.hpp"
#include "symprep/prim/onehot.hpp"
#include "symprep/prim/parallel.hpp"
#include "symprep/sim/certify.hpp"
#include "symprep/synth/damped.hpp"

namespace symprep::harness {

namespace {

using dist::Rational;
using prim::BuildContext;
using prim::BuildOptions;

BuildOptions budget(int k) {
  BuildOptions o;
  o.fanout_budget = k;
  return o;
}

const std::string& need(const PrimitiveParams& p, const std::string& key) {
  const auto it = p.find(key);
  if (it == p.end()) throw ConfigError("missing parameter '" + key + "'");
  return it->second;
}

int need_int(const PrimitiveParams& p, const std::string& key) {
  const std::string& s = need(p, key);
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("parameter " + key + "='" + s + "' is not an integer");
}

double need_real(const PrimitiveParams& p, const std::string& key) {
  const std::string& s = need(p, key);
  // sin2pi/r stands for sin^2(pi/(2r))
  if (s.rfind("sin2pi/", 0) == 0) {
    const double r = std::stod(s.substr(7));
    return std::pow(std::sin(std::numbers::pi / (2.0 * r)), 2);
  }
  if (s.find('/') != std::string::npos) return dist::to_double(parse_rational(s));
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw ConfigError("parameter " + key + "='" + s + "' is not a number");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string canonical(const PrimitiveParams& p) {
  std::string s;
  for (const auto& [k, v] : p) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

// |<want|got>|^2 with got not renormalized
double overlap_sq(const sim::StateVector& got, const SparseState& want) {
  const auto w = sim::StateVector::from_sparse(got.qubit_order(), want);
  return std::norm(sim::inner_product(w.amplitudes(), got.amplitudes()));
}

void fill(PrimitiveCheck& out, const sim::CertificationResult& r) {
  out.cases = r.cases;
  out.min_fidelity = r.min_fidelity;
  out.passed = r.passed;
  out.failure = r.failure;
}

void fill(PrimitiveCheck& out, double fidelity, bool clean, double tol) {
  out.cases = 1;
  out.min_fidelity = fidelity;
  out.passed = clean && fidelity >= 1.0 - tol;
  if (!clean) out.failure = "ancillas not returned to zero";
  else if (!out.passed) out.failure = "fidelity below tolerance";
}

// sqrt(alpha)|+>|1> + sqrt(1-alpha)|0>|0> on (data, flag)
prim::MarkedPreparation toy_marked(double alpha) {
  CircuitBuilder b(2);
  const Register data = b.add_register("data", 1);
  const Register flag = b.add_register("flag", 1);
  b.add(Gate::unitary(flag[0], mat::rot(1.0 - alpha), "rot"));
  b.add(Gate::controlled_hermitian({flag[0]}, data[0], mat::hadamard(), "h"));
  return {b.build(), {flag[0]}, alpha, std::nullopt};
}

SparseState plus_state() {
  const double h = std::sqrt(0.5);
  return SparseState(1, {{0, h}, {1, h}});
}

void exact_grover(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  BuildContext ctx;
  const auto mp = toy_marked(need_real(p, "alpha"));
  const Circuit c = prim::exact_grover(ctx, mp);
  // flags stay at 1
  const auto keep = prim::qubits_of(c, {"data", "flag"});
  const double h = std::sqrt(0.5);
  const double f = overlap_sq(sim::run_from_zero(c).restricted(keep),
                              SparseState(2, {{2, h}, {3, h}}));
  out.circuit = c;
  fill(out, f, true, tol);
}

void amplify(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  BuildContext ctx;
  const auto mp = toy_marked(need_real(p, "alpha"));
  const Circuit c = prim::amplify_to_exact(ctx, mp);
  const auto r =
      sim::check_clean_preparation(c, c.reg("data").qubits, plus_state(), tol);
  out.circuit = c;
  fill(out, r.fidelity, r.clean, tol);
}

void adjust(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  const int n = need_int(p, "n");
  if (n < 2 || n > 4) throw ConfigError("adjust needs 2 <= n <= 4");
  std::mt19937 rng(static_cast<unsigned>(need_int(p, "seed")));
  std::uniform_int_distribution<int> num(1, 12);
  std::vector<Rational> alpha;
  Rational sum = 0;
  for (int i = 0; i < n; ++i) {
    alpha.emplace_back(num(rng));
    sum += alpha.back();
  }
  for (auto& a : alpha) a /= sum;
  std::vector<Rational> beta;
  std::vector<double> beta_d;
  for (int i = 0; i < n; ++i) {
    beta.emplace_back(num(rng), 12);
    beta_d.push_back(dist::to_double(beta.back()));
  }
  // branch i carries |i mod 2> on a data qubit above the one-hot block
  const auto un = static_cast<std::size_t>(n);
  std::vector<SparseState::Entry> e;
  for (std::size_t i = 0; i < un; ++i) {
    const std::uint64_t data = (i % 2) ? (std::uint64_t{1} << un) : 0;
    e.emplace_back((std::uint64_t{1} << i) | data,
                   std::sqrt(dist::to_double(alpha[i])));
  }
  CircuitBuilder b(2);
  const Register x = b.add_register("x", un);
  const Register d = b.add_register("d", 1);
  b.add(oracle_prep_op("branches", SparseState(un + 1, e))
            .on(concat({x.qubits, d.qubits})));
  const prim::BranchPreparation bp{b.build(), x.qubits, alpha};
  BuildContext ctx;
  const Circuit c = prim::adjust_amplitudes(ctx, bp, beta);
  const auto want = prim::reweighted(sim::run_from_zero(bp.circuit), bp.onehot,
                                     beta_d);
  const auto got = sim::run_from_zero(c).restricted(bp.circuit.qubits());
  const double f =
      std::norm(sim::inner_product(want.amplitudes(), got.amplitudes()));
  out.circuit = c;
  fill(out, f, true, tol);
}

void parallel(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  const Rational alpha = parse_rational(need(p, "alpha"));
  CircuitBuilder b(2);
  const Register d = b.add_register("d", 1);
  const Register f = b.add_register("f", 1);
  b.add(Gate::unitary(f[0], mat::rot(1.0 - dist::to_double(alpha)), "rot"));
  b.add(Gate::cnot(f[0], d[0]));
  const prim::MarkedPreparation base{b.build(), {f[0]}, dist::to_double(alpha),
                                     alpha};
  BuildContext ctx;
  const Circuit c = prim::parallel_amplify(ctx, base, d.qubits);
  const auto r = sim::check_clean_preparation(c, c.reg("out").qubits,
                                              SparseState::basis(1, 1), tol);
  out.circuit = c;
  fill(out, r.fidelity, r.clean, tol);
}

void ham(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  const int n = need_int(p, "n");
  const int k = need_int(p, "k");
  BuildContext ctx(budget(k));
  const Circuit c = prim::ham_gadget(ctx, n, k);
  const LibraryOp op = prim::ham_op(ctx, n, k);
  const auto iface = prim::qubits_of(c, {"x", "out"});
  out.circuit = c;
  fill(out, sim::certify_library_gate(
                c, op.on(iface),
                sim::basis_cases(iface.size(), [](std::uint64_t) { return true; }),
                tol));
}

void custom_threshold(PrimitiveCheck& out, const PrimitiveParams& p,
                      double tol) {
  const int n = need_int(p, "n");
  const int k = need_int(p, "k");
  const std::string& l = need(p, "ladder");
  if (l != "le" && l != "eq") throw ConfigError("ladder must be le or eq");
  const auto ladder = l == "le" ? prim::Ladder::Le : prim::Ladder::Eq;
  BuildContext ctx(budget(k));
  const Circuit c = prim::custom_threshold(ctx, n, k, ladder);
  const LibraryOp op = prim::custom_threshold_op(ctx, n, k, ladder);
  const auto iface = prim::qubits_of(c, {"sel", "x", "out"});
  const std::uint64_t sel = (std::uint64_t{1} << k) - 1;
  out.circuit = c;
  fill(out, sim::certify_library_gate(
                c, op.on(iface),
                sim::basis_cases(iface.size(),
                                 [&](std::uint64_t x) {
                                   return std::popcount(x & sel) <= 1;
                                 }),
                tol));
}

void ctrl_dicke(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  const int ell = need_int(p, "ell");
  std::vector<int> weights;
  for (const auto& w : split(need(p, "weights"), ':')) {
    weights.push_back(need_int({{"w", w}}, "w"));
  }
  BuildContext ctx;
  const Circuit c = prim::ctrl_dicke(ctx, ell, weights);
  const LibraryOp op = prim::ctrl_dicke_op(ctx, ell, weights);
  const auto iface = prim::qubits_of(c, {"sel", "t"});
  const std::size_t w = weights.size();
  const std::uint64_t sel = (std::uint64_t{1} << w) - 1;
  out.circuit = c;
  fill(out, sim::certify_library_gate(
                c, op.on(iface),
                sim::basis_cases(iface.size(),
                                 [&](std::uint64_t x) {
                                   return (x >> w) == 0 &&
                                          std::popcount(x & sel) <= 1;
                                 }),
                tol));
}

Gate controlled_prep(const std::vector<QubitId>& iface,
                     const SparseState& on_one) {
  auto map = std::make_shared<ControlledPrepMap>(
      1, iface.size() - 1, ControlledPrepMap::Domain::Any,
      std::vector<ControlledPrepMap::Branch>{{1, on_one}});
  return Gate::library("ctrl", map, iface, {});
}

std::vector<sim::CertificationCase> control_cases(std::size_t targets) {
  return {{"ctl=0", SparseState::basis(targets + 1, 0)},
          {"ctl=1", SparseState::basis(targets + 1, 1)}};
}

void ctrl_state(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  const std::string& which = need(p, "case");
  const double h = std::sqrt(0.5);
  std::size_t t = 0;
  SparseState joint(1, {{0, 1.0}});
  SparseState on_one(1, {{0, 1.0}});
  if (which == "bit") {
    // phi0 = |0>, phi1 = |1>
    t = 1;
    joint = SparseState(2, {{0b00, h}, {0b11, h}});
    on_one = SparseState::basis(1, 1);
  } else if (which == "bell") {
    // phi0 = |00>, phi1 = Bell
    t = 2;
    joint = SparseState(3, {{0b000, h}, {0b100, 0.5}, {0b111, 0.5}});
    on_one = SparseState(2, {{0b00, h}, {0b11, h}});
  } else {
    throw ConfigError("ctrl_state case must be bit or bell");
  }
  CircuitBuilder b(2);
  const Register tr = b.add_register("t", t);
  const Register br = b.add_register("b", 1);
  b.add(oracle_prep_op("pair", joint).on(concat({tr.qubits, br.qubits})));
  const Circuit prep = b.build();
  BuildContext ctx;
  const Circuit c = prim::ctrl_state(ctx, prep, tr.qubits, br[0]);
  const auto iface = prim::qubits_of(c, {"ctl", "t"});
  out.circuit = c;
  fill(out, sim::certify_library_gate(c, controlled_prep(iface, on_one),
                                      control_cases(t), tol));
}

void ctrl_zero_overlap(PrimitiveCheck& out, const PrimitiveParams& p,
                       double tol) {
  const Rational alpha = parse_rational(need(p, "alpha"));
  const int n = need_int(p, "n");
  const SparseState perp = dicke_state(n, 1);
  std::vector<SparseState::Entry> e = {{0, std::sqrt(dist::to_double(alpha))}};
  for (const auto& [i, a] : perp.entries()) {
    e.emplace_back(i, a * std::sqrt(1.0 - dist::to_double(alpha)));
  }
  CircuitBuilder b(2);
  const Register t = b.add_register("t", perp.num_qubits());
  b.add(oracle_prep_op("psi", SparseState(perp.num_qubits(), e)).on(t.qubits));
  BuildContext ctx;
  const Circuit c = prim::ctrl_from_zero_overlap(ctx, b.build(), t.qubits, alpha);
  const auto iface = prim::qubits_of(c, {"ctl", "t"});
  out.circuit = c;
  fill(out, sim::certify_library_gate(c, controlled_prep(iface, perp),
                                      control_cases(perp.num_qubits()), tol));
}

std::vector<Rational> pmf_list(const std::string& s) {
  std::vector<Rational> p;
  for (const auto& x : split(s, ':')) p.push_back(parse_rational(x));
  return p;
}

void onehot_dist(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  const auto pmf = pmf_list(need(p, "p"));
  BuildContext ctx;
  const Circuit c = prim::prepare_onehot_dist(ctx, pmf);
  const auto r = sim::check_clean_preparation(c, c.reg("x").qubits,
                                              prim::onehot_dist_state(pmf), tol);
  out.circuit = c;
  fill(out, r.fidelity, r.clean, tol);
}

void ctrl_damped(PrimitiveCheck& out, const PrimitiveParams& p, double tol) {
  const int m = need_int(p, "m");
  const int k = need_int(p, "k");
  BuildContext ctx(budget(std::max(2, k)));
  const Circuit c = synth::ctrl_damped(ctx, m, k);
  const LibraryOp op = synth::ctrl_damped_op(ctx, m, k);
  const auto iface = prim::qubits_of(c, {"ctl", "x"});
  out.circuit = c;
  fill(out, sim::certify_library_gate(c, op.on(iface),
                                      control_cases(static_cast<std::size_t>(m)),
                                      tol));
}

using Checker = void (*)(PrimitiveCheck&, const PrimitiveParams&, double);

struct Entry {
  const char* name;
  const char* keys;
  Checker run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"exact_grover", "alpha (number, p/q or sin2pi/r)", exact_grover},
      {"amplify_to_exact", "alpha", amplify},
      {"adjust_amplitudes", "n seed", adjust},
      {"parallel_amplify", "alpha (p/q)", parallel},
      {"ham_gadget", "n k", ham},
      {"custom_threshold", "n k ladder (le|eq)", custom_threshold},
      {"ctrl_dicke", "ell weights (w:w:..)", ctrl_dicke},
      {"ctrl_state", "case (bit|bell)", ctrl_state},
      {"ctrl_from_zero_overlap", "alpha (p/q) n", ctrl_zero_overlap},
      {"onehot_dist", "p (p/q:p/q:..)", onehot_dist},
      {"ctrl_damped", "m k", ctrl_damped},
  };
  return e;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  const auto parts = split(s, '/');
  try {
    if (parts.size() == 1) return Rational(dist::Integer(parts[0]));
    if (parts.size() == 2) {
      const dist::Integer den(parts[1]);
      if (den == 0) throw ConfigError("zero denominator in '" + s + "'");
      return Rational(dist::Integer(parts[0]), den);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
  }
  throw ConfigError("'" + s + "' is not a rational");
}

std::vector<std::pair<std::string, std::string>> primitive_names() {
  std::vector<std::pair<std::string, std::string>> v;
  for (const auto& e : entries()) v.emplace_back(e.name, e.keys);
  return v;
}

PrimitiveCheck check_primitive(const std::string& name,
                               const PrimitiveParams& params, double tol) {
  for (const auto& e : entries()) {
    if (name != e.name) continue;
    PrimitiveCheck out;
    out.name = name;
    out.params = canonical(params);
    try {
      e.run(out, params, tol);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& ex) {
      out.passed = false;
      out.failure = ex.what();
    }
    if (out.circuit) out.qubits = out.circuit->num_qubits();
    return out;
  }
  throw ConfigError("unknown primitive '" + name + "'");
}

std::vector<PrimitiveCall> default_catalog() {
  std::vector<PrimitiveCall> v = {
      {"exact_grover", {{"alpha", "1/4"}}},
      {"exact_grover", {{"alpha", "sin2pi/5"}}},
      {"amplify_to_exact", {{"alpha", "0.4"}}},
      {"amplify_to_exact", {{"alpha", "1"}}},
  };
  for (int draw = 0; draw < 5; ++draw) {
    v.push_back({"adjust_amplitudes",
                 {{"n", std::to_string(2 + draw % 3)},
                  {"seed", std::to_string(100 + draw)}}});
  }
  v.push_back({"parallel_amplify", {{"alpha", "1/2"}}});
  v.push_back({"parallel_amplify", {{"alpha", "1/3"}}});
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= std::min(n, 2); ++k) {
      v.push_back({"ham_gadget", {{"n", std::to_string(n)}, {"k", std::to_string(k)}}});
    }
  }
  v.push_back({"ctrl_state", {{"case", "bit"}}});
  v.push_back({"ctrl_state", {{"case", "bell"}}});
  for (const char* a : {"1/2", "1/3", "3/4"}) {
    v.push_back({"ctrl_from_zero_overlap", {{"alpha", a}, {"n", "3"}}});
  }
  v.push_back({"ctrl_dicke", {{"ell", "3"}, {"weights", "0:1:2"}}});
  v.push_back({"ctrl_dicke", {{"ell", "3"}, {"weights", "1:2"}}});
  v.push_back({"ctrl_dicke", {{"ell", "2"}, {"weights", "1"}}});
  for (const auto& [n, k, l] : {std::tuple{3, 1, "le"}, std::tuple{4, 2, "le"},
                                std::tuple{3, 2, "eq"}, std::tuple{4, 2, "eq"}}) {
    v.push_back({"custom_threshold",
                 {{"n", std::to_string(n)}, {"k", std::to_string(k)}, {"ladder", l}}});
  }
  v.push_back({"onehot_dist", {{"p", "1/4:3/4"}}});
  v.push_back({"onehot_dist", {{"p", "1/3:2/3"}}});
  v.push_back({"ctrl_damped", {{"m", "2"}, {"k", "2"}}});
  v.push_back({"ctrl_damped", {{"m", "3"}, {"k", "2"}}});
  return v;
}

std::vector<PrimitiveCheck> run_catalog(const std::vector<PrimitiveCall>& calls,
                                        int workers, double tol) {
  std::vector<PrimitiveCheck> out(calls.size());
  parallel_for(calls.size(), workers, [&](std::size_t i) {
    out[i] = check_primitive(calls[i].name, calls[i].params, tol);
  });
  return out;
}

}  // namespace symprep::harness

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

// symprep command line: claim sweeps, acceptance, synthesis and checks.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symprep/core/cost.hpp"
#include "symprep/core/serialize.hpp"
#include "symprep/harness/acceptance.hpp"
#include "symprep/harness/catalog.hpp"
#include "symprep/harness/claims.hpp"
#include "symprep/sim/simulator.hpp"
#include "symprep/sim/state_vector.hpp"
#include "symprep/synth/symmetric.hpp"
#include "symprep/synth/targets.hpp"

namespace fs = std::filesystem;
using namespace symprep;

namespace {

struct Common {
  int workers = 1;
  std::string out;
  double tol = 1e-9;
  std::string grid;
};

void write_json(const fs::path& path, const nlohmann::json& j) {
  harness::write_text(path, j.dump(2) + "\n");
}

fs::path out_dir(const Common& c) {
  const fs::path dir(c.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

std::vector<Complex> read_eta(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read eta file " + path);
  std::map<int, Complex> entries;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int k = 0;
    double re = 0.0;
    double im = 0.0;
    if (!(ls >> k)) continue;
    if (!(ls >> re >> im) || k < 0) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected 'k real imag'");
    }
    if (!entries.emplace(k, Complex(re, im)).second) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": weight " + std::to_string(k) + " repeated");
    }
  }
  if (entries.empty()) throw std::runtime_error(path + ": no amplitudes");
  std::vector<Complex> eta(static_cast<std::size_t>(entries.rbegin()->first) + 1);
  for (const auto& [k, a] : entries) eta[static_cast<std::size_t>(k)] = a;
  return eta;
}

nlohmann::json verification_json(const Circuit& c, const std::vector<QubitId>& data,
                                 const SparseState& target, double tol) {
  if (c.num_qubits() > sim::kMaxQubits) {
    return {{"simulated", false},
            {"reason", std::to_string(c.num_qubits()) +
                           " qubits, above the dense simulator limit of " +
                           std::to_string(sim::kMaxQubits)}};
  }
  const auto v = sim::check_clean_preparation(c, data, target, tol);
  const auto amps = sim::run_from_zero(c).restricted(data);
  const double spread = synth::weight_class_spread(
      std::vector<Complex>(amps.amplitudes().begin(), amps.amplitudes().end()));
  return {{"simulated", true},
          {"fidelity", v.fidelity},
          {"clean", v.clean},
          {"residual_ancilla_mass", v.residual_ancilla_mass},
          {"weight_class_spread", spread},
          {"pass", v.clean && v.fidelity >= 1.0 - tol}};
}

int cmd_claims(const Common& c, const std::vector<std::string>& ids,
               const std::string& fault, bool table) {
  harness::SweepConfig cfg;
  if (!c.grid.empty()) cfg.grid = harness::parse_grid(c.grid);
  cfg.tol = c.tol;
  cfg.workers = c.workers;
  cfg.claims = ids;
  if (fault == "lambda") cfg.fault = harness::Fault::LambdaOffByOne;
  else if (!fault.empty()) throw harness::ConfigError("unknown fault '" + fault + "'");
  const auto verdicts = harness::run_claims(cfg);
  const std::string text = harness::claims_table(verdicts);
  if (table) {
    std::cout << text;
  } else {
    // totals only
    std::cout << text.substr(text.rfind("\n\n") + 2);
  }
  if (!c.out.empty()) harness::write_claims(out_dir(c), verdicts);
  std::cout << (harness::all_pass(verdicts) ? "all claims pass\n" : "FAILURES\n");
  return harness::all_pass(verdicts) ? 0 : 1;
}

int cmd_accept(const Common& c, const std::vector<std::string>& filter) {
  harness::AcceptanceConfig cfg;
  cfg.workers = c.workers;
  cfg.tol = c.tol;
  cfg.filter = filter;
  if (!c.grid.empty()) cfg.grid = harness::parse_grid(c.grid);
  const auto rep = harness::run_acceptance(cfg);
  std::cout << harness::report_text(rep);
  if (!c.out.empty()) harness::write_acceptance(out_dir(c), rep);
  return rep.pass() ? 0 : 1;
}

int emit_synthesis(const Common& c, const synth::SynthesisOutput& out,
                   bool verify) {
  nlohmann::json rep = {{"n", out.circuit.metadata().n},
                        {"k", out.circuit.metadata().k},
                        {"ell", out.circuit.metadata().ell},
                        {"cost", to_json(out.report)}};
  int status = 0;
  if (verify) {
    rep["verification"] = verification_json(out.circuit, out.data, out.target, c.tol);
    if (rep["verification"].value("simulated", false) &&
        !rep["verification"]["pass"].get<bool>()) {
      status = 1;
    }
  }
  std::cout << rep.dump(2) << "\n";
  if (!c.out.empty()) {
    const fs::path dir = out_dir(c);
    write_circuit(dir / "circuit.json", out.circuit);
    write_json(dir / "report.json", rep);
  }
  return status;
}

int cmd_verify(const Common& c, const std::string& path, const std::string& target) {
  const Circuit circ = read_circuit(path);
  const auto& md = circ.metadata();
  if (md.output_register.empty()) {
    throw std::runtime_error(path + ": circuit names no output register");
  }
  const auto data = circ.reg(md.output_register).qubits;
  SparseState want = dicke_state(md.n, md.k);
  if (target == "symmetric") {
    if (md.eta.empty()) throw std::runtime_error(path + ": circuit carries no eta");
    want = synth::symmetric_target(md.n, md.eta);
  }
  const auto v = verification_json(circ, data, want, c.tol);
  nlohmann::json rep = {{"circuit", path}, {"target", target}, {"verification", v}};
  std::cout << rep.dump(2) << "\n";
  if (!c.out.empty()) write_json(out_dir(c) / "verify.json", rep);
  if (!v.value("simulated", false)) return 1;
  return v["pass"].get<bool>() ? 0 : 1;
}

int cmd_primitive(const Common& c, const std::string& name,
                  const std::vector<std::string>& sets) {
  harness::PrimitiveParams params;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw harness::ConfigError("--set needs key=value, got " + s);
    params[s.substr(0, eq)] = s.substr(eq + 1);
  }
  const auto check = harness::check_primitive(name, params, c.tol);
  nlohmann::json rep = {{"name", check.name},         {"params", check.params},
                        {"qubits", check.qubits},     {"cases", check.cases},
                        {"min_fidelity", check.min_fidelity},
                        {"verdict", check.passed ? "pass" : "fail"}};
  if (!check.failure.empty()) rep["failure"] = check.failure;
  if (check.circuit) rep["cost"] = to_json(cost(*check.circuit));
  std::cout << rep.dump(2) << "\n";
  if (!c.out.empty()) {
    const fs::path dir = out_dir(c);
    if (check.circuit) write_circuit(dir / "circuit.json", *check.circuit);
    write_json(dir / "certification.json", rep);
  }
  return check.passed ? 0 : 1;
}

int cmd_report(const Common& c, const std::string& path) {
  const Circuit circ = read_circuit(path);
  const nlohmann::json rep = {{"circuit", path}, {"cost", to_json(cost(circ))}};
  std::cout << rep.dump(2) << "\n";
  if (!c.out.empty()) write_json(out_dir(c) / "report.json", rep);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-depth Dicke and symmetric state synthesis"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", common.workers, "worker threads")
        ->check(CLI::PositiveNumber);
    sub->add_option("--out", common.out, "directory for structured output");
    sub->add_option("--tol", common.tol, "fidelity tolerance")->check(CLI::PositiveNumber);
  };

  auto* claims = app.add_subcommand("claims", "sweep the combinatorial claims");
  add_common(claims);
  std::vector<std::string> claim_ids;
  std::string fault;
  bool table = false;
  claims->add_option("--grid", common.grid, "e.g. m=1..64,k=1..6,slice=20");
  claims->add_option("--claim", claim_ids, "run only these claim ids");
  claims->add_option("--inject-fault", fault, "negative control: lambda");
  claims->add_flag("--table", table, "print every row");

  auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
  add_common(accept);
  std::vector<std::string> filter;
  accept->add_option("--grid", common.grid, "claim grid for criterion 5");
  accept->add_option("--filter", filter, "criterion ids or numbers");

  auto* synth_cmd = app.add_subcommand("synth", "build a preparation circuit");
  synth_cmd->require_subcommand(1);
  synth::SynthesisRequest req;
  std::optional<int> ell;
  std::optional<int> budget;
  bool no_verify = false;
  std::string eta_path;
  auto* dicke = synth_cmd->add_subcommand("dicke", "|D^n_k>");
  add_common(dicke);
  dicke->add_option("--n", req.n)->required();
  dicke->add_option("--k", req.k)->required();
  dicke->add_option("--ell", ell, "buckets");
  dicke->add_option("--budget", budget, "fanout budget, default k");
  dicke->add_flag("--no-verify", no_verify, "skip simulation");
  auto* symmetric = synth_cmd->add_subcommand("symmetric", "sum_k eta_k |D^n_k>");
  add_common(symmetric);
  symmetric->add_option("--n", req.n)->required();
  symmetric->add_option("--eta", eta_path, "lines of 'k real imag'")->required();
  symmetric->add_option("--ell", ell, "buckets");
  symmetric->add_option("--budget", budget, "fanout budget, default top weight");
  symmetric->add_flag("--no-verify", no_verify, "skip simulation");

  auto* verify = app.add_subcommand("verify", "simulate a circuit file");
  add_common(verify);
  std::string circuit_path;
  std::string target = "dicke";
  verify->add_option("--circuit", circuit_path)->required()->check(CLI::ExistingFile);
  verify->add_option("--target", target)
      ->check(CLI::IsMember({"dicke", "symmetric"}));

  auto* primitive = app.add_subcommand("primitive", "build and certify one primitive");
  add_common(primitive);
  std::string prim_name;
  std::vector<std::string> sets;
  bool list = false;
  primitive->add_option("name", prim_name, "primitive name");
  primitive->add_option("--set", sets, "parameter key=value");
  primitive->add_flag("--list", list, "list primitives and their parameters");

  auto* report = app.add_subcommand("report", "cost report of a circuit file");
  add_common(report);
  report->add_option("--circuit", circuit_path)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);
  sim::set_worker_count(common.workers);

  try {
    if (claims->parsed()) return cmd_claims(common, claim_ids, fault, table);
    if (accept->parsed()) return cmd_accept(common, filter);
    if (dicke->parsed() || symmetric->parsed()) {
      req.ell = ell;
      req.fanout_budget = budget;
      if (symmetric->parsed()) {
        req.eta = read_eta(eta_path);
        req.k = static_cast<int>(req.eta->size()) - 1;
      }
      return emit_synthesis(common, synth::synthesize(req), !no_verify);
    }
    if (verify->parsed()) return cmd_verify(common, circuit_path, target);
    if (primitive->parsed()) {
      if (list || prim_name.empty()) {
        for (const auto& [name, keys] : harness::primitive_names()) {
          std::printf("%-24s %s\n", name.c_str(), keys.c_str());
        }
        return 0;
      }
      return cmd_primitive(common, prim_name, sets);
    }
    if (report->parsed()) return cmd_report(common, circuit_path);
  } catch (const harness::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

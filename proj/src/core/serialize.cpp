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

#include "symprep/core/serialize.hpp"

#include <fstream>
#include <sstream>

#include "symprep/core/cost.hpp"

namespace symprep {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& c) { return {c.real(), c.imag()}; }

Complex complex_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json qubits_to_json(const std::vector<QubitId>& qs) {
  json a = json::array();
  for (const auto& q : qs) a.push_back(q.index);
  return a;
}

std::vector<QubitId> qubits_from_json(const json& j) {
  std::vector<QubitId> out;
  for (const auto& v : j) out.push_back({v.get<std::uint32_t>()});
  return out;
}

AmplificationRecord record_from_json(const json& j) {
  AmplificationRecord r;
  r.label = j.at("label").get<std::string>();
  r.alpha = j.at("alpha").get<double>();
  r.rounds = j.at("rounds").get<int>();
  if (j.contains("alpha_exact")) r.alpha_exact = j["alpha_exact"].get<std::string>();
  r.forced = j.value("forced", false);
  return r;
}

json gate_to_json(const Gate& g) {
  json j = {{"kind", std::string(to_string(g.kind()))},
            {"targets", qubits_to_json(g.targets())},
            {"controls", qubits_to_json(g.controls())}};
  if (!g.label().empty()) j["label"] = g.label();
  switch (g.kind()) {
    case GateKind::Unitary:
    case GateKind::ControlledHermitian: {
      json m = json::array();
      for (const auto& c : g.matrix()) m.push_back(complex_to_json(c));
      j["matrix"] = m;
      break;
    }
    case GateKind::ProductReflection: {
      json s = json::array();
      for (const auto& st : g.states()) {
        s.push_back({complex_to_json(st[0]), complex_to_json(st[1])});
      }
      j["states"] = s;
      break;
    }
    case GateKind::Fanout:
      j["widened"] = g.widened();
      break;
    case GateKind::Library: {
      const auto& c = g.library_cost();
      json amps = json::array();
      for (const auto& a : c.amplifications) amps.push_back(to_json(a));
      j["map"] = semantic_map_to_json(*g.map());
      j["inverse"] = g.inverted();
      j["declared"] = {{"depth", c.depth},
                       {"width", c.width},
                       {"ancillas", c.ancillas},
                       {"amplifications", amps}};
      break;
    }
    default:
      break;
  }
  return j;
}

Gate gate_from_json(const json& j) {
  const auto kind = gate_kind_from_string(j.at("kind").get<std::string>());
  const auto targets = qubits_from_json(j.at("targets"));
  const auto controls = qubits_from_json(j.value("controls", json::array()));
  const std::string label = j.value("label", std::string{});
  auto need = [&](std::size_t n) {
    if (targets.size() < n) throw ParseError("too few targets");
  };
  auto last_split = [&]() {
    need(2);
    return std::pair(std::vector<QubitId>(targets.begin(), targets.end() - 1),
                     targets.back());
  };
  Gate g = Gate::swap({0}, {1});
  switch (kind) {
    case GateKind::Unitary:
    case GateKind::ControlledHermitian: {
      need(1);
      Matrix2 m{};
      const auto& mj = j.at("matrix");
      if (mj.size() != 4) throw ParseError("matrix needs four entries");
      for (std::size_t i = 0; i < 4; ++i) m[i] = complex_from_json(mj.at(i));
      if (kind == GateKind::Unitary) {
        if (!controls.empty()) throw ParseError("unitary gate with controls");
        return Gate::unitary(targets.at(0), m, label);
      }
      return Gate::controlled_hermitian(controls, targets.at(0), m, label);
    }
    case GateKind::ProductReflection: {
      std::vector<std::array<Complex, 2>> states;
      for (const auto& s : j.at("states")) {
        states.push_back({complex_from_json(s.at(0)), complex_from_json(s.at(1))});
      }
      g = Gate::product_reflection(targets, std::move(states));
      break;
    }
    case GateKind::And: {
      auto [in, out] = last_split();
      g = Gate::and_gate(in, out);
      break;
    }
    case GateKind::Or: {
      auto [in, out] = last_split();
      g = Gate::or_gate(in, out);
      break;
    }
    case GateKind::Nor: {
      auto [in, out] = last_split();
      g = Gate::nor_gate(in, out);
      break;
    }
    case GateKind::Fanout:
      need(2);
      g = Gate::fanout(targets.front(),
                       std::vector<QubitId>(targets.begin() + 1, targets.end()),
                       j.value("widened", false));
      break;
    case GateKind::Swap:
      if (targets.size() != 2) throw ParseError("swap needs two targets");
      g = Gate::swap(targets[0], targets[1]);
      break;
    case GateKind::Library: {
      const auto& d = j.at("declared");
      LibraryCost c;
      c.depth = d.at("depth").get<int>();
      c.width = d.at("width").get<int>();
      c.ancillas = d.at("ancillas").get<int>();
      for (const auto& a : d.value("amplifications", json::array())) {
        c.amplifications.push_back(record_from_json(a));
      }
      g = Gate::library(label, semantic_map_from_json(j.at("map")), targets,
                        std::move(c));
      if (j.value("inverse", false)) g = g.inverse();
      break;
    }
  }
  return g.with_controls(controls);
}

}  // namespace

json metadata_to_json(const CircuitMetadata& md) {
  json amps = json::array();
  for (const auto& a : md.amplifications) amps.push_back(to_json(a));
  json eta = json::array();
  for (const auto& e : md.eta) eta.push_back(complex_to_json(e));
  return {{"n", md.n},
          {"k", md.k},
          {"ell", md.ell},
          {"output_register", md.output_register},
          {"recycled_ancillas", md.recycled_ancillas},
          {"amplifications", amps},
          {"eta", eta}};
}

CircuitMetadata metadata_from_json(const json& j) {
  CircuitMetadata md;
  md.n = j.value("n", 0);
  md.k = j.value("k", 0);
  md.ell = j.value("ell", 0);
  md.output_register = j.value("output_register", std::string{});
  md.recycled_ancillas = j.value("recycled_ancillas", 0);
  for (const auto& a : j.value("amplifications", json::array())) {
    md.amplifications.push_back(record_from_json(a));
  }
  for (const auto& e : j.value("eta", json::array())) {
    md.eta.push_back(complex_from_json(e));
  }
  return md;
}

json circuit_to_json(const Circuit& circuit) {
  json regs = json::array();
  for (const auto& r : circuit.registers()) {
    regs.push_back({{"name", r.name}, {"qubits", qubits_to_json(r.qubits)}});
  }
  json layers = json::array();
  for (const auto& layer : circuit.layers()) {
    json l = json::array();
    for (const auto& g : layer) l.push_back(gate_to_json(g));
    layers.push_back(l);
  }
  return {{"format", "symprep-circuit"},
          {"version", kCircuitFormatVersion},
          {"fanout_budget", circuit.fanout_budget()},
          {"metadata", metadata_to_json(circuit.metadata())},
          {"registers", regs},
          {"layers", layers}};
}

Circuit circuit_from_json(const json& j) {
  std::vector<Register> regs;
  CircuitMetadata md;
  int budget = 1;
  try {
    if (j.value("version", 0) != kCircuitFormatVersion) {
      throw ParseError("unsupported circuit format version");
    }
    budget = j.at("fanout_budget").get<int>();
    md = metadata_from_json(j.at("metadata"));
    for (const auto& r : j.at("registers")) {
      regs.push_back(
          {r.at("name").get<std::string>(), qubits_from_json(r.at("qubits"))});
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("circuit header: ") + e.what());
  }
  Circuit c = [&] {
    try {
      return Circuit::create(std::move(regs), budget, md);
    } catch (const std::exception& e) {
      throw ParseError(std::string("circuit header: ") + e.what());
    }
  }();
  const json* layers = j.contains("layers") ? &j["layers"] : nullptr;
  if (!layers || !layers->is_array()) throw ParseError("circuit has no layers");
  for (std::size_t li = 0; li < layers->size(); ++li) {
    std::vector<Gate> gates;
    const auto& lj = (*layers)[li];
    for (std::size_t gi = 0; gi < lj.size(); ++gi) {
      try {
        gates.push_back(gate_from_json(lj[gi]));
      } catch (const std::exception& e) {
        throw ParseError("layer " + std::to_string(li) + ", gate " +
                         std::to_string(gi) + ": " + e.what());
      }
    }
    try {
      c = c.append_layer(std::move(gates));
    } catch (const std::exception& e) {
      throw ParseError("layer " + std::to_string(li) + ": " + e.what());
    }
  }
  return c;
}

std::string serialize(const Circuit& circuit) {
  return circuit_to_json(circuit).dump(1);
}

Circuit deserialize(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed circuit text: ") + e.what());
  }
  return circuit_from_json(j);
}

void write_circuit(const std::filesystem::path& path, const Circuit& circuit) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(circuit) << '\n';
}

Circuit read_circuit(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return deserialize(ss.str());
}

}  // namespace symprep

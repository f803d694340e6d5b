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

#include "symprep/core/cost.hpp"

#include <algorithm>
#include <map>

namespace symprep {

CostReport cost(const Circuit& circuit) {
  CostReport r;
  r.layers = static_cast<int>(circuit.layers().size());
  r.qubits = static_cast<int>(circuit.num_qubits());
  std::map<std::string, AmplificationRecord> sites;
  for (const auto& rec : circuit.metadata().amplifications) {
    sites.emplace(rec.label, rec);
  }
  int peak_declared = 0;
  for (const auto& layer : circuit.layers()) {
    int deepest = 0;
    int declared = 0;
    for (const auto& g : layer) {
      deepest = std::max(deepest, g.depth());
      r.max_fanout_width = std::max(r.max_fanout_width, g.fanout_width());
      ++r.gates;
      if (g.kind() == GateKind::Library) {
        declared += g.library_cost().ancillas;
        for (const auto& rec : g.library_cost().amplifications) {
          sites.emplace(rec.label, rec);
        }
      }
    }
    r.depth += deepest;
    peak_declared = std::max(peak_declared, declared);
  }
  int output = 0;
  const auto& out_name = circuit.metadata().output_register;
  if (!out_name.empty() && circuit.has_register(out_name)) {
    output = static_cast<int>(circuit.reg(out_name).size());
  }
  r.ancilla_count = r.qubits - output + peak_declared +
                    circuit.metadata().recycled_ancillas;
  for (auto& [label, rec] : sites) {
    r.grover_rounds += rec.rounds;
    r.amplifications.push_back(rec);
  }
  return r;
}

nlohmann::json to_json(const AmplificationRecord& rec) {
  nlohmann::json j = {{"label", rec.label},
                      {"alpha", rec.alpha},
                      {"rounds", rec.rounds}};
  if (rec.alpha_exact) j["alpha_exact"] = *rec.alpha_exact;
  if (rec.forced) j["forced"] = true;
  return j;
}

nlohmann::json to_json(const CostReport& report) {
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& a : report.amplifications) amps.push_back(to_json(a));
  return {{"depth", report.depth},
          {"layers", report.layers},
          {"gates", report.gates},
          {"qubits", report.qubits},
          {"ancilla_count", report.ancilla_count},
          {"max_fanout_width", report.max_fanout_width},
          {"grover_rounds", report.grover_rounds},
          {"amplifications", amps}};
}

}  // namespace symprep

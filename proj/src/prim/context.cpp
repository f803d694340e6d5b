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

#include "symprep/prim/context.hpp"

#include <algorithm>

#include "symprep/core/cost.hpp"

namespace symprep::prim {

BuildContext::BuildContext(BuildOptions options) : options_(std::move(options)) {
  if (options_.fanout_budget < 1) {
    throw PreconditionError("fanout budget must be positive");
  }
}

BuildContext::Scope::Scope(BuildContext& ctx, const std::string& name)
    : ctx_(ctx) {
  ctx_.path_.push_back(name);
}

BuildContext::Scope::~Scope() { ctx_.path_.pop_back(); }

std::string BuildContext::label(const std::string& leaf) const {
  std::string out;
  for (const auto& p : path_) out += p + "/";
  return out + leaf;
}

std::optional<int> BuildContext::forced_rounds(const std::string& label) const {
  auto it = options_.round_override.find(label);
  if (it == options_.round_override.end()) return std::nullopt;
  return it->second;
}

bool BuildContext::should_simulate(std::size_t num_qubits) const {
  return options_.check_preconditions &&
         num_qubits <= options_.simulation_limit;
}

std::vector<QubitId> qubits_of(const Circuit& circuit,
                               const std::vector<std::string>& names) {
  std::vector<QubitId> out;
  for (const auto& n : names) {
    const auto& r = circuit.reg(n);
    out.insert(out.end(), r.qubits.begin(), r.qubits.end());
  }
  return out;
}

LibraryCost declared_cost(const Circuit& explicit_circuit,
                          std::size_t interface_qubits) {
  const CostReport c = cost(explicit_circuit);
  int output = 0;
  const auto& out = explicit_circuit.metadata().output_register;
  if (!out.empty() && explicit_circuit.has_register(out)) {
    output = static_cast<int>(explicit_circuit.reg(out).size());
  }
  LibraryCost lc;
  lc.depth = std::max(c.depth, 1);
  lc.width = c.max_fanout_width;
  lc.ancillas = std::max(
      0, c.ancilla_count + output - static_cast<int>(interface_qubits));
  lc.amplifications = c.amplifications;
  return lc;
}

LibraryOp semantic_op(std::string tag, SemanticMapPtr map,
                      const Circuit& explicit_circuit) {
  const std::size_t arity = map->arity();
  return LibraryOp{std::move(tag), std::move(map),
                   declared_cost(explicit_circuit, arity)};
}

double marked_mass(const sim::StateVector& state,
                   const std::vector<QubitId>& flags) {
  const std::uint64_t m = state.mask_of(flags);
  double sum = 0.0;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if ((i & m) == m) sum += std::norm(amps[i]);
  }
  return sum;
}

}  // namespace symprep::prim

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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symprep/core/circuit.hpp"
#include "symprep/core/library.hpp"
#include "symprep/sim/state_vector.hpp"

namespace symprep::prim {

struct BuildOptions {
  // simulate inputs of amplification and control steps to check their form
  bool check_preconditions = true;
  // only circuits up to this many qubits are simulated for those checks
  std::size_t simulation_limit = 16;
  int fanout_budget = 2;
  // amplification site label -> Grover rounds to use instead of the exact count
  std::map<std::string, int> round_override;
};

/**
 * Carries options and the label path through nested builders. Labels name
 * build sites, never sizes, so a site keeps its label when n changes.
 */
class BuildContext {
 public:
  explicit BuildContext(BuildOptions options = {});

  class Scope {
   public:
    Scope(BuildContext& ctx, const std::string& name);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    BuildContext& ctx_;
  };

  /** Current path joined with leaf, "a/b/leaf". */
  std::string label(const std::string& leaf) const;
  std::optional<int> forced_rounds(const std::string& label) const;
  bool should_simulate(std::size_t num_qubits) const;
  int fanout_budget() const { return options_.fanout_budget; }
  const BuildOptions& options() const { return options_; }

 private:
  BuildOptions options_;
  std::vector<std::string> path_;
};

/** Qubits of the named registers, concatenated. */
std::vector<QubitId> qubits_of(const Circuit& circuit,
                               const std::vector<std::string>& names);

/**
 * Declared cost of a library gate standing in for explicit_circuit, whose
 * first interface_qubits qubits are the gate's targets.
 */
LibraryCost declared_cost(const Circuit& explicit_circuit,
                          std::size_t interface_qubits);

/** Semantic gate with the cost of its explicit construction. */
LibraryOp semantic_op(std::string tag, SemanticMapPtr map,
                      const Circuit& explicit_circuit);

/** Probability that every flag reads 1. */
double marked_mass(const sim::StateVector& state,
                   const std::vector<QubitId>& flags);

}  // namespace symprep::prim

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

#include <nlohmann/json.hpp>

#include "symprep/core/circuit.hpp"

namespace symprep {

struct CostReport {
  // sum over layers of the deepest gate in the layer
  int depth = 0;
  int layers = 0;
  int gates = 0;
  int qubits = 0;
  // qubits outside the output register, plus the peak of declared library
  // ancillas in one layer, plus recycled allocations
  int ancilla_count = 0;
  int max_fanout_width = 0;
  // sum of rounds over distinct amplification sites
  int grover_rounds = 0;
  // own sites and those declared by library gates, sorted by label
  std::vector<AmplificationRecord> amplifications;
};

CostReport cost(const Circuit& circuit);

nlohmann::json to_json(const CostReport& report);
nlohmann::json to_json(const AmplificationRecord& rec);

}  // namespace symprep

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

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symprep/core/circuit.hpp"
#include "symprep/sim/simulator.hpp"

namespace symprep::sim {

/** One input of a certification run, laid out on the interface qubits. */
struct CertificationCase {
  std::string label;
  SparseState input;
};

struct CertificationResult {
  bool passed = false;
  double min_fidelity = 1.0;
  std::size_t cases = 0;
  // label of the first failing input, empty on success
  std::string failure;
};

/**
 * Checks an explicit circuit against a semantic gate. The gate's targets
 * are the interface qubits of the circuit; every other circuit qubit is an
 * ancilla that must start and end in |0>. Each case is run through both,
 * plus the normalized sum of all cases.
 */
CertificationResult certify_library_gate(
    const Circuit& explicit_circuit, const Gate& semantic,
    const std::vector<CertificationCase>& cases, double tol = 1e-9);

/** Every basis input of the interface whose index passes keep. */
std::vector<CertificationCase> basis_cases(
    std::size_t num_qubits, const std::function<bool(std::uint64_t)>& keep);

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symprep::sim

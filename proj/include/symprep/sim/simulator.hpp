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

#include <span>

#include "symprep/core/circuit.hpp"
#include "symprep/sim/state_vector.hpp"

namespace symprep::sim {

/** Worker threads for large states; SYMPREP_WORKERS, default 1. */
int worker_count();
/** Overrides the environment for this process; 0 restores it. */
void set_worker_count(int workers);

/**
 * Sums over fixed-size chunks, then adds the partial sums in order, so the
 * result does not depend on the worker count.
 */
double norm_squared(std::span<const Complex> amps);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);

void apply_in_place(StateVector& state, const Gate& gate);
StateVector apply(StateVector state, const Gate& gate);

/**
 * Applies the layers in order. The input must cover every circuit qubit.
 * The norm is checked after each layer.
 */
StateVector run(const Circuit& circuit, StateVector input);
/** Runs from |0...0> over the circuit's qubits in register order. */
StateVector run_from_zero(const Circuit& circuit);

/** |<s|t>|^2 after aligning t to s's qubit order. */
double fidelity(const StateVector& s, const StateVector& t);

struct VerificationResult {
  double fidelity = 0.0;
  bool clean = false;
  double residual_ancilla_mass = 1.0;
};

/**
 * Runs from |0...0> and compares with target on the register and |0> on
 * every other qubit. Clean when the mass off the all-zero ancilla pattern
 * is below tol.
 */
VerificationResult check_clean_preparation(const Circuit& circuit,
                                           const std::vector<QubitId>& target_qubits,
                                           const SparseState& target,
                                           double tol = 1e-9);

}  // namespace symprep::sim

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

#include <optional>
#include <string>
#include <vector>

#include "symprep/core/circuit.hpp"
#include "symprep/core/library.hpp"
#include "symprep/dist/exact.hpp"
#include "symprep/prim/context.hpp"

namespace symprep::prim {

/**
 * Controlled copy of c on a new register "ctl". The control is fanned out
 * (within the budget) to one copy per gate of the widest layer, each gate
 * takes its own copy as an extra control, then the copies are uncomputed.
 * Non-Hermitian single-qubit gates raise ControlError.
 */
Circuit ctrl_circuit(BuildContext& ctx, const Circuit& c,
                     std::optional<std::size_t> max_gates = std::nullopt);

/** Registers sel (t), q1..qt and target (s qubits each); one library gate. */
Circuit w_controlled_swap(BuildContext& ctx, int t, int s);

/**
 * |e_i>|0^ell> -> |e_i>|D^ell_{w_i}> and |0>|0> -> |0>|0>. Registers sel
 * (one per weight), t (ell), then slots q1.. that end at zero.
 */
Circuit ctrl_dicke(BuildContext& ctx, int ell, const std::vector<int>& weights);
LibraryOp ctrl_dicke_op(BuildContext& ctx, int ell,
                        const std::vector<int>& weights);

/**
 * prep makes (|phi_0>|0>_b + |phi_1>|1>_b)/sqrt 2 on target and the
 * branch qubit b. The result adds register "ctl" and maps
 * |c>_ctl|0> -> |c>_ctl|phi_c> with b and prep's ancillas back at zero.
 */
Circuit ctrl_state(BuildContext& ctx, const Circuit& prep,
                   const std::vector<QubitId>& target, QubitId branch);

/**
 * prep makes sqrt(alpha)|0^n> + sqrt(1-alpha)|perp> on target with
 * <perp|0^n> = 0. Balances the two parts by marking, rotation and exact
 * amplification, then calls ctrl_state. Adds register "ctl".
 */
Circuit ctrl_from_zero_overlap(BuildContext& ctx, const Circuit& prep,
                               const std::vector<QubitId>& target,
                               const dist::Rational& alpha,
                               double floor = 0.01);

}  // namespace symprep::prim

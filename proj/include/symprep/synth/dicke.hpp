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
#include <vector>

#include "symprep/core/circuit.hpp"
#include "symprep/prim/context.hpp"
#include "symprep/synth/targets.hpp"

namespace symprep::synth {

/**
 * Appends the occupancy construction on the bucketed qubits T (ell buckets
 * of n/ell consecutive qubits) of base. Adds registers A (k, one-hot
 * occupancy), B (ell, back at zero) and mark (back at zero).
 */
Circuit occupancy_stage(prim::BuildContext& ctx, const Circuit& base,
                        const std::vector<QubitId>& T, int k, int ell);

/**
 * Clears the one-hot occupancy A left by occupancy_stage: OR each bucket
 * into B, HAM^ell_k from B into A plus a recycled zero qubit, OR again.
 */
Circuit clear_occupancy(prim::BuildContext& ctx, const Circuit& c,
                        const std::vector<QubitId>& T, int k, int ell);

/** |Occ(D^n_k, ell)> on T then A. Requires ell | n and k <= min(ell, n/ell). */
SynthesisOutput build_occupancy_state(prim::BuildContext& ctx, int n, int k,
                                      int ell);

/**
 * |D^n_k> on register T. When ell does not divide n the construction runs
 * on n' = ell ceil(n/ell) qubits and the tail is forced to zero by exact
 * amplification.
 */
SynthesisOutput build_dicke(prim::BuildContext& ctx, int n, int k,
                            std::optional<int> ell = std::nullopt);

/** |D^n_{n-k}> as build_dicke(n, k) followed by X on every qubit. */
SynthesisOutput build_dicke_flipped(prim::BuildContext& ctx, int n, int k,
                                    std::optional<int> ell = std::nullopt);

}  // namespace symprep::synth

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

#include <vector>

#include "symprep/core/circuit.hpp"
#include "symprep/core/library.hpp"
#include "symprep/dist/exact.hpp"
#include "symprep/prim/context.hpp"

namespace symprep::prim {

/** (|0^n> + |W_n>)/sqrt 2 on register x; a single library gate. */
Circuit build_zero_w(BuildContext& ctx, int n);

/** sum_i sqrt(p_i) |e_i> over n qubits. */
SparseState onehot_dist_state(const std::vector<dist::Rational>& p);

/**
 * Marked preparation used by prepare_onehot_dist: registers t (n), a,
 * bin (binary_width(n - 1) bits). From zeros it leaves
 *   sqrt(1/(n+1)) sum_{i<n} sqrt(p_i) |i>_bin |1>_a + sqrt(n/(n+1)) |0>|0>
 * with t back at zero. Requires n >= 2.
 */
Circuit onehot_base(BuildContext& ctx, const std::vector<dist::Rational>& p);
/** Same state on (bin, a). */
SparseState onehot_base_state(const std::vector<dist::Rational>& p);

/**
 * Clean preparation of sum_i sqrt(p_i) |e_i> on register x, p a pmf over
 * [n]. Boosts onehot_base with parallel amplification, then converts the
 * binary index to one-hot.
 */
Circuit prepare_onehot_dist(BuildContext& ctx,
                            const std::vector<dist::Rational>& p);
LibraryOp onehot_dist_op(BuildContext& ctx,
                         const std::vector<dist::Rational>& p);

/**
 * Any state on L qubits, register s. Values 1..2^L-1 sit at their own
 * one-hot position and value 0 at the last one; the last position is
 * cleared by a NOR before converting back to binary.
 */
Circuit prepare_small_state(BuildContext& ctx,
                            const std::vector<Complex>& amplitudes);
LibraryOp small_state_op(BuildContext& ctx,
                         const std::vector<Complex>& amplitudes);

/** Exact pmf from squared magnitudes, normalized in rational arithmetic. */
std::vector<dist::Rational> exact_weights(const std::vector<double>& w);

}  // namespace symprep::prim

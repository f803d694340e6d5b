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

#include "symprep/core/circuit.hpp"
#include "symprep/core/library.hpp"
#include "symprep/prim/context.hpp"

namespace symprep::synth {

/** |S^m_k>: amplitude sqrt(s(|x|) / C(m, |x|)) on 1 <= |x| <= k. */
SparseState damped_state(int m, int k);

/** sqrt(1 - gamma)|0^m> + sqrt(gamma)|S^m_k>, gamma from dist::zero_shift. */
SparseState zero_damped_state(int m, int k);

/**
 * Clean preparation of zero_damped_state on register x (m). Biased coins,
 * HAM into a (k+1)-bit register, truncation to weight <= k by exact
 * amplification, per-weight reweighting, then HAM again to clear.
 */
Circuit prepare_zero_damped(prim::BuildContext& ctx, int m, int k);
LibraryOp zero_damped_op(prim::BuildContext& ctx, int m, int k);

/**
 * |0>|0^m> -> |0>|0^m>, |1>|0^m> -> |1>|S^m_k>. Registers ctl and x first.
 * For m = 1 this is a CNOT built by ctrl_circuit.
 */
Circuit ctrl_damped(prim::BuildContext& ctx, int m, int k);
LibraryOp ctrl_damped_op(prim::BuildContext& ctx, int m, int k);

}  // namespace symprep::synth

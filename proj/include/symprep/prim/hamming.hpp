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

namespace symprep::prim {

/**
 * |x>|y> -> |x>|y xor e_{min(k+1,|x|)}>, e_0 = 0. Registers x (n), out
 * (k+1) and the fanout copies; k EXACT rungs and one THRESHOLD_{k+1} rung
 * each read their own copy of x.
 */
Circuit ham_gadget(BuildContext& ctx, int n, int k);
LibraryOp ham_op(BuildContext& ctx, int n, int k);

enum class Ladder { Le, Eq };

/**
 * |a>|x>|y> -> |a>|x>|y xor [|x| <= j]> for a = e_j (or [|x| == j] with
 * Ladder::Eq), and y unchanged for a = 0. Registers sel (k), x (n), out.
 */
Circuit custom_threshold(BuildContext& ctx, int n, int k, Ladder ladder);
LibraryOp custom_threshold_op(BuildContext& ctx, int n, int k, Ladder ladder);

}  // namespace symprep::prim

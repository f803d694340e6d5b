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

#include <string>
#include <vector>

#include "symprep/prim/amplify.hpp"

namespace symprep::prim {

/**
 * Boosts a marked preparation whose unmarked branch is all zeros. Runs
 * t = ceil(1/alpha) copies, marks "exactly one copy hit", amplifies that,
 * swaps the hit copy's data into a fresh register "out" and clears the
 * hit pattern with an inverse W_t preparation.
 *
 * base must have a single flag; data lists the base qubits that hold
 * |psi>, every other base qubit must be |0> in both branches.
 */
Circuit parallel_amplify(BuildContext& ctx, const MarkedPreparation& base,
                         const std::vector<QubitId>& data,
                         const std::string& site = "parallel");

/** Number of copies for a marked mass alpha. */
int parallel_copies(const dist::Rational& alpha);

}  // namespace symprep::prim

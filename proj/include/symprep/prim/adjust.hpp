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

#include "symprep/core/circuit.hpp"
#include "symprep/dist/exact.hpp"
#include "symprep/prim/context.hpp"
#include "symprep/sim/state_vector.hpp"

namespace symprep::prim {

/**
 * A clean preparation of sum_i sqrt(alpha_i) |e_i>_X |phi_i>, with X given
 * as the list of one-hot qubits.
 */
struct BranchPreparation {
  Circuit circuit;
  std::vector<QubitId> onehot;
  std::vector<dist::Rational> alpha;
};

/**
 * Reweights branch i by beta_i: prepares
 *   (1/sqrt Z) sum_i sqrt(alpha_i beta_i) |e_i>|phi_i>,  Z = sum alpha_i beta_i.
 * Uses ancillas adj_a (one per branch) and adj_q, all returned to 0.
 */
Circuit adjust_amplitudes(BuildContext& ctx, const BranchPreparation& prep,
                          const std::vector<dist::Rational>& beta,
                          const std::string& site = "adjust");

/** The state adjust_amplitudes should produce from a simulated input. */
sim::StateVector reweighted(const sim::StateVector& prepared,
                            const std::vector<QubitId>& onehot,
                            const std::vector<double>& beta);

}  // namespace symprep::prim

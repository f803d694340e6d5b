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

#include <cmath>
#include <vector>

#include "symprep/core/circuit.hpp"
#include "symprep/prim/context.hpp"
#include "symprep/sim/simulator.hpp"

namespace symprep::testing {

/** Runs c from zero and returns the state restricted to keep (others at 0). */
inline sim::StateVector output_on(const Circuit& c,
                                  const std::vector<QubitId>& keep) {
  return sim::run_from_zero(c).restricted(keep);
}

inline prim::BuildOptions budget(int fanout) {
  prim::BuildOptions o;
  o.fanout_budget = fanout;
  return o;
}

inline double overlap(const sim::StateVector& got, const SparseState& want) {
  const auto w = sim::StateVector::from_sparse(got.qubit_order(), want);
  return sim::fidelity(w, got);
}

}  // namespace symprep::testing

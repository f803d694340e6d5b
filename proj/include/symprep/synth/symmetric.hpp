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

#include "symprep/prim/context.hpp"
#include "symprep/synth/targets.hpp"

namespace symprep::synth {

/**
 * sum_k eta_k |D^n_k> on register T, k = 0..eta.size()-1. Trailing zero
 * weights are dropped before the bucket plan is chosen. When the plan pads
 * to n' qubits the weights are rescaled so that forcing the tail to zero
 * leaves eta.
 */
SynthesisOutput build_symmetric(prim::BuildContext& ctx, int n,
                                const std::vector<Complex>& eta,
                                std::optional<int> ell = std::nullopt);

/** A full request as the command line sees it. */
struct SynthesisRequest {
  int n = 0;
  int k = 0;  // weight, or the top weight in symmetric mode
  std::optional<int> ell;
  std::optional<std::vector<Complex>> eta;
  // defaults to max(k, 1)
  std::optional<int> fanout_budget;
};

SynthesisOutput synthesize(const SynthesisRequest& request,
                           prim::BuildOptions options = {});

}  // namespace symprep::synth

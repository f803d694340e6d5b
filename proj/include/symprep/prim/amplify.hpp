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
#include "symprep/dist/exact.hpp"
#include "symprep/prim/context.hpp"

namespace symprep::prim {

/**
 * A circuit that, from all zeros, prepares
 *   sqrt(alpha) |psi>|1..1>_flags + sqrt(1 - alpha) |bad>
 * where every component of |bad> has some flag at 0.
 */
struct MarkedPreparation {
  Circuit circuit;
  std::vector<QubitId> flags;
  double alpha = 0.0;
  std::optional<dist::Rational> alpha_exact;
};

/** Smallest odd r with pi/(2r) <= asin(sqrt(alpha)). */
int odd_period(double alpha);

/**
 * Grover rounds that take the marked amplitude to one. alpha must equal
 * sin^2(pi/(2r)) for an odd r; the flags are left at 1.
 */
Circuit exact_grover(BuildContext& ctx, const MarkedPreparation& mp,
                     const std::string& site = "grover");

/**
 * Shrinks the marked mass to the nearest sin^2(pi/(2r)) below alpha with a
 * flag-controlled rotation on a fresh "amp" qubit, runs exact_grover, then
 * flips the flags and amp back to 0. The result prepares |psi> cleanly.
 */
Circuit amplify_to_exact(BuildContext& ctx, const MarkedPreparation& mp,
                         const std::string& site = "amplify");

}  // namespace symprep::prim

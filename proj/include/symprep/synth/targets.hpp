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
#include "symprep/core/cost.hpp"
#include "symprep/core/sparse_state.hpp"
#include "symprep/sim/simulator.hpp"

namespace symprep::synth {

/** Bucket layout for n data qubits; n_prime > n means padding. */
struct BucketPlan {
  int n = 0;
  int k = 0;
  int ell = 0;
  int n_prime = 0;
  int m = 0;  // n_prime / ell
};

/**
 * With ell given: pad to the next multiple of ell. Without: ell = k^3 if it
 * divides n and leaves k qubits per bucket, else the largest ell in
 * [k, k^3] that does, else ell = k with n padded to a multiple of k of at
 * least k^2. Throws DomainError if the buckets end up smaller than k.
 */
BucketPlan plan_buckets(int n, int k, std::optional<int> ell = std::nullopt);

/** Occupancy state on T (n qubits) then the one-hot A (k qubits). */
SparseState occupancy_target(int n, int k, int ell);

/** sum_k eta_k |D^n_k>; eta must be unit norm. */
SparseState symmetric_target(int n, const std::vector<Complex>& eta);

struct SynthesisOutput {
  Circuit circuit;
  CostReport report;
  // analytic state on data
  SparseState target;
  std::vector<QubitId> data;
};

/** Fidelity and cleanness of the circuit against its own target. */
sim::VerificationResult verify(const SynthesisOutput& out, double tol = 1e-9);

/**
 * Largest relative spread of amplitudes within one Hamming-weight class,
 * |a_x - a_y| / max |a| over classes with nonzero mass. Zero means every
 * class is uniform.
 */
double weight_class_spread(const std::vector<Complex>& amplitudes);

}  // namespace symprep::synth

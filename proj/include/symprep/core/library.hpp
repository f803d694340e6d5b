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

#include "symprep/core/gate.hpp"

namespace symprep {

/** A semantic map with its tag and declared cost, not yet placed. */
struct LibraryOp {
  std::string tag;
  SemanticMapPtr map;
  LibraryCost cost;

  Gate on(std::vector<QubitId> targets) const;
  std::size_t arity() const { return map->arity(); }
};

/**
 * Declared costs of the black-box constructions taken as given. Widths
 * scale with the parameter that sets their fanout.
 */
namespace cost_table {
inline constexpr int kThresholdDepth = 5;
inline constexpr int kExactDepth = 7;
inline constexpr int kOneHotDepth = 3;
inline constexpr int kZeroWDepth = 4;
inline constexpr int kDickePrepDepth = 8;
inline constexpr int kWSwapDepth = 3;
inline constexpr int kOracleDepth = 1;
}  // namespace cost_table

/** x (n bits), out: out ^= [|x| >= t]. */
LibraryOp threshold_op(int n, int t);
/** x (n bits), out: out ^= [|x| == t]. */
LibraryOp exact_op(int n, int t);
/** bin (ceil log2(k+1) bits), onehot (k bits). */
LibraryOp one_hot_op(int k);
/** (|0^n> + |W_n>)/sqrt 2. */
LibraryOp zero_w_op(int n);
/** Dicke state |D^n_k>. */
LibraryOp dicke_prep_op(int n, int k);
/** Selector (t), t slots of s qubits, target slot of s qubits. */
LibraryOp w_swap_op(int t, int s);
/** Arbitrary state preparation; for tests and toy inputs. */
LibraryOp oracle_prep_op(const std::string& tag, SparseState state);

/** |D^n_k> as a sparse state, amplitude 1/sqrt C(n,k) on each support. */
SparseState dicke_state(int n, int k);
/** Number of bits to write 0..k in binary. */
int binary_width(int k);

}  // namespace symprep

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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symprep/core/sparse_state.hpp"
#include "symprep/core/types.hpp"

namespace symprep::sim {

/** Largest register the dense simulator accepts. */
inline constexpr std::size_t kMaxQubits = 26;

/**
 * Dense amplitudes over an ordered list of qubits. Qubit order[i] is bit i
 * of the amplitude index.
 */
class StateVector {
 public:
  StateVector(std::vector<QubitId> order, std::vector<Complex> amplitudes);

  static StateVector zero(std::vector<QubitId> order);
  static StateVector basis(std::vector<QubitId> order, std::uint64_t index);
  /** Sparse state laid out on the given qubits. */
  static StateVector from_sparse(std::vector<QubitId> order,
                                 const SparseState& state);

  const std::vector<QubitId>& qubit_order() const { return order_; }
  std::size_t num_qubits() const { return order_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> amplitudes() { return amps_; }
  Complex amplitude(std::uint64_t index) const { return amps_.at(index); }

  /** Bit position of q, or -1 when q is not covered. */
  int position(QubitId q) const;
  std::uint64_t mask_of(const std::vector<QubitId>& qubits) const;

  double norm() const;

  /** Same state with qubits listed in another order. */
  StateVector reordered(const std::vector<QubitId>& order) const;
  /** This state followed by other's qubits. */
  StateVector tensor(const StateVector& other) const;
  /** Extends with |0> on extra qubits. */
  StateVector padded(const std::vector<QubitId>& extra) const;

  /**
   * Component with every qubit outside keep at |0>, laid out on keep. Not
   * renormalized.
   */
  StateVector restricted(const std::vector<QubitId>& keep) const;

  /** Probability of each value of the listed qubits, little-endian. */
  std::vector<double> distribution(const std::vector<QubitId>& qubits) const;

  SparseState to_sparse() const;

 private:
  std::vector<QubitId> order_;
  std::vector<Complex> amps_;
};

/**
 * One row per amplitude above 1e-12: bit string in qubit order, real part,
 * imaginary part.
 */
std::string dump_state(const StateVector& state);

}  // namespace symprep::sim

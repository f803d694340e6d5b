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
#include <utility>
#include <vector>

#include "symprep/core/types.hpp"

namespace symprep {

/**
 * A state given by its nonzero amplitudes. Entries are sorted by basis
 * index; bit i of an index is local qubit i.
 */
class SparseState {
 public:
  using Entry = std::pair<std::uint64_t, Complex>;

  SparseState() = default;
  SparseState(std::size_t num_qubits, std::vector<Entry> entries);

  static SparseState basis(std::size_t num_qubits, std::uint64_t index);
  /** Drops entries below 1e-15 in magnitude. */
  static SparseState from_dense(std::size_t num_qubits,
                                std::span<const Complex> amplitudes);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Entry>& entries() const { return entries_; }
  double norm() const;
  Complex amplitude(std::uint64_t index) const;
  std::vector<Complex> to_dense() const;

  /** Throws PreconditionError when the norm is off by more than tol. */
  void require_normalized(double tol = 1e-10) const;

  friend bool operator==(const SparseState&, const SparseState&) = default;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<Entry> entries_;
};

/**
 * Unitary U = e^{i phi} (I - 2 w w^dag) with U|0> = psi. Touches only the
 * support of psi plus index 0, apart from the global phase.
 */
class ZeroReflector {
 public:
  explicit ZeroReflector(const SparseState& psi);

  void apply(std::span<Complex> block, bool inverse) const;

 private:
  Complex phase_{1.0, 0.0};
  bool trivial_ = false;
  std::vector<SparseState::Entry> w_;
};

}  // namespace symprep

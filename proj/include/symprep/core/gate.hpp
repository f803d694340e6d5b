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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "symprep/core/semantic_map.hpp"
#include "symprep/core/types.hpp"

namespace symprep {

enum class GateKind {
  Unitary,
  ControlledHermitian,
  ProductReflection,
  And,
  Or,
  Nor,
  Fanout,
  Swap,
  Library,
};

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/** Declared resources of a library gate. */
struct LibraryCost {
  int depth = 1;
  int width = 0;
  int ancillas = 0;
  std::vector<AmplificationRecord> amplifications;
  friend bool operator==(const LibraryCost&, const LibraryCost&) = default;
};

/**
 * One gate. Every kind acts on targets(); controls() are extra qubits that
 * must all read 1 for the gate to fire.
 *
 *   Unitary             targets {q}, never controlled
 *   ControlledHermitian targets {q}, at least one control
 *   ProductReflection   I - 2|v><v|, v a product of one-qubit states
 *   And / Or / Nor      targets {inputs..., out}; out ^= f(inputs)
 *   Fanout              targets {source, copies...}; copies ^= source
 *   Swap                targets {a, b}
 *   Library             targets in the order of the semantic map
 */
class Gate {
 public:
  static Gate unitary(QubitId q, const Matrix2& m, std::string label = "");
  static Gate controlled_hermitian(std::vector<QubitId> controls, QubitId q,
                                   const Matrix2& m, std::string label = "");
  static Gate product_reflection(std::vector<QubitId> qubits,
                                 std::vector<std::array<Complex, 2>> states);
  /** Reflection about |0...0> on the given qubits. */
  static Gate zero_reflection(std::vector<QubitId> qubits);
  static Gate and_gate(std::vector<QubitId> inputs, QubitId out);
  static Gate or_gate(std::vector<QubitId> inputs, QubitId out);
  static Gate nor_gate(std::vector<QubitId> inputs, QubitId out);
  static Gate cnot(QubitId control, QubitId target);
  static Gate fanout(QubitId source, std::vector<QubitId> copies,
                     bool widened = false);
  static Gate swap(QubitId a, QubitId b);
  static Gate library(std::string tag, SemanticMapPtr map,
                      std::vector<QubitId> targets, LibraryCost cost);

  GateKind kind() const { return kind_; }
  const std::vector<QubitId>& targets() const { return targets_; }
  const std::vector<QubitId>& controls() const { return controls_; }
  /** Controls followed by targets. */
  std::vector<QubitId> qubits() const;
  const std::string& label() const { return label_; }

  const Matrix2& matrix() const { return matrix_; }
  const std::vector<std::array<Complex, 2>>& states() const { return states_; }
  bool widened() const { return widened_; }
  const SemanticMapPtr& map() const { return map_; }
  const LibraryCost& library_cost() const { return cost_; }
  bool inverted() const { return inverted_; }

  /** Depth contribution: 1, or the declared depth of a library gate. */
  int depth() const;
  /** Fanout copies, or declared width of a library gate; else 0. */
  int fanout_width() const;

  Gate inverse() const;

  /**
   * Adds control qubits. A plain unitary becomes a controlled Hermitian
   * gate; a non-Hermitian one raises ControlError.
   */
  Gate with_controls(const std::vector<QubitId>& extra) const;

  /** Same gate with every qubit passed through f. */
  Gate remapped(const std::function<QubitId(QubitId)>& f) const;

  friend bool operator==(const Gate& a, const Gate& b);

 private:
  Gate() = default;
  void check_distinct() const;

  GateKind kind_ = GateKind::Unitary;
  std::vector<QubitId> targets_;
  std::vector<QubitId> controls_;
  std::string label_;
  Matrix2 matrix_{};
  std::vector<std::array<Complex, 2>> states_;
  bool widened_ = false;
  SemanticMapPtr map_;
  LibraryCost cost_;
  bool inverted_ = false;
};

}  // namespace symprep

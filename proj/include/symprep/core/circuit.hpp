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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symprep/core/gate.hpp"

namespace symprep {

struct CircuitMetadata {
  int n = 0;
  int k = 0;
  int ell = 0;
  std::string output_register;
  // ancilla allocations served by recycling an already clean qubit
  int recycled_ancillas = 0;
  std::vector<AmplificationRecord> amplifications;
  // symmetric targets only: amplitudes per Hamming weight
  std::vector<Complex> eta;
  friend bool operator==(const CircuitMetadata&,
                         const CircuitMetadata&) = default;
};

/**
 * Immutable layered circuit. Registers partition the circuit's qubits.
 * Gates within a layer are disjoint.
 */
class Circuit {
 public:
  /** Empty circuit over fresh registers. */
  static Circuit create(std::vector<Register> registers, int fanout_budget,
                        CircuitMetadata metadata = {});

  /** Returns a new circuit with one more layer; this one is unchanged. */
  Circuit append_layer(std::vector<Gate> gates) const;
  Circuit with_metadata(CircuitMetadata metadata) const;

  const std::vector<Register>& registers() const { return registers_; }
  bool has_register(std::string_view name) const;
  const Register& reg(std::string_view name) const;
  const std::vector<std::vector<Gate>>& layers() const { return layers_; }
  const CircuitMetadata& metadata() const { return metadata_; }
  int fanout_budget() const { return fanout_budget_; }

  /** All qubits in register order. */
  std::vector<QubitId> qubits() const;
  std::size_t num_qubits() const;
  std::size_t gate_count() const;

  /** Reversed layers of inverted gates. */
  Circuit inverse() const;

  /** Widest fanout allowed with the widened flag set. */
  static int widened_cap(int fanout_budget);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  friend class CircuitBuilder;
  Circuit() = default;
  void check_layer(const std::vector<Gate>& layer) const;

  std::vector<Register> registers_;
  std::vector<std::vector<Gate>> layers_;
  CircuitMetadata metadata_;
  int fanout_budget_ = 1;
};

/**
 * Mutable accumulator for circuits. Each added gate is placed in the
 * earliest layer after every gate already on its qubits.
 */
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int fanout_budget);
  /** Continues from an existing circuit, keeping its qubits and layers. */
  explicit CircuitBuilder(const Circuit& base);

  /** Fresh qubits; a taken name gets a numeric suffix. */
  Register add_register(const std::string& name, std::size_t size);
  const Register& reg(std::string_view name) const;
  bool has_register(std::string_view name) const;
  const std::vector<Register>& registers() const { return registers_; }
  int fanout_budget() const { return fanout_budget_; }

  void add(const Gate& gate);
  void add_all(const std::vector<Gate>& gates);

  /** Appends gates of a circuit over qubits this builder already owns. */
  void append(const Circuit& sub);

  /**
   * Appends a circuit built over its own qubits. Registers named in
   * bindings map onto the given qubits; the rest become fresh registers
   * named prefix + name. Returns the image of every sub register.
   */
  std::map<std::string, Register> embed(
      const Circuit& sub,
      const std::map<std::string, std::vector<QubitId>>& bindings,
      const std::string& prefix);

  /** Records that `count` ancillas were served by recycling. */
  void note_recycled(int count) { metadata_.recycled_ancillas += count; }
  /** Keeps the first record per label. */
  void note_amplification(AmplificationRecord rec);
  CircuitMetadata& metadata() { return metadata_; }

  Circuit build() const;

 private:
  std::size_t layer_of(const Gate& gate) const;

  int fanout_budget_;
  std::vector<Register> registers_;
  std::vector<std::vector<Gate>> layers_;
  std::map<QubitId, std::size_t> next_free_;  // first usable layer per qubit
  CircuitMetadata metadata_;
  std::uint32_t next_id_ = 0;
};

}  // namespace symprep

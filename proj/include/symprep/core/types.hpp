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

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symprep {

using Complex = std::complex<double>;

/** Row-major 2x2 matrix: {m00, m01, m10, m11}. */
using Matrix2 = std::array<Complex, 4>;

struct QubitId {
  std::uint32_t index{};
  friend auto operator<=>(const QubitId&, const QubitId&) = default;
};

struct Register {
  std::string name;
  std::vector<QubitId> qubits;

  std::size_t size() const { return qubits.size(); }
  QubitId operator[](std::size_t i) const { return qubits.at(i); }
  friend bool operator==(const Register&, const Register&) = default;
};

/** Concatenates qubit lists in the given order. */
std::vector<QubitId> concat(
    std::initializer_list<std::vector<QubitId>> parts);

/**
 * One amplitude amplification site. The label is the build path of the
 * site, so the same site keeps its label across problem sizes.
 */
struct AmplificationRecord {
  std::string label;
  double alpha = 0.0;
  // exact marked mass as "num/den" when known
  std::optional<std::string> alpha_exact;
  int rounds = 0;
  bool forced = false;
  friend bool operator==(
      const AmplificationRecord&, const AmplificationRecord&) = default;
};

class CircuitError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ControlError : public CircuitError {
 public:
  using CircuitError::CircuitError;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** A promise on the input of a semantic map was broken. */
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symprep

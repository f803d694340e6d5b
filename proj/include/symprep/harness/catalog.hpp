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
#include <optional>
#include <string>
#include <vector>

#include "symprep/core/circuit.hpp"
#include "symprep/dist/exact.hpp"

namespace symprep::harness {

using PrimitiveParams = std::map<std::string, std::string>;

/** Explicit circuit of one primitive and its check against the semantics. */
struct PrimitiveCheck {
  std::string name;
  std::string params;  // canonical "k=v k=v"
  std::optional<Circuit> circuit;
  std::size_t qubits = 0;
  std::size_t cases = 0;
  double min_fidelity = 0.0;
  bool passed = false;
  std::string failure;
};

struct PrimitiveCall {
  std::string name;
  PrimitiveParams params;
};

/** Names accepted by check_primitive with their parameter keys. */
std::vector<std::pair<std::string, std::string>> primitive_names();

/**
 * Builds and certifies one primitive instance. Throws ConfigError for an
 * unknown name or missing/bad parameters; construction errors from the
 * primitive are reported as a failed check.
 */
PrimitiveCheck check_primitive(const std::string& name,
                               const PrimitiveParams& params,
                               double tol = 1e-9);

/** The fixed certification list run by the acceptance suite. */
std::vector<PrimitiveCall> default_catalog();

std::vector<PrimitiveCheck> run_catalog(const std::vector<PrimitiveCall>& calls,
                                        int workers, double tol = 1e-9);

/** "p/q" or an integer. */
dist::Rational parse_rational(const std::string& s);

}  // namespace symprep::harness

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

#include "symprep/sim/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace symprep::sim {

std::vector<CertificationCase> basis_cases(
    std::size_t num_qubits, const std::function<bool(std::uint64_t)>& keep) {
  std::vector<CertificationCase> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << num_qubits); ++x) {
    if (!keep(x)) continue;
    std::string label(num_qubits, '0');
    for (std::size_t b = 0; b < num_qubits; ++b) {
      if ((x >> b) & 1) label[b] = '1';
    }
    out.push_back({"|" + label + ">", SparseState::basis(num_qubits, x)});
  }
  return out;
}

CertificationResult certify_library_gate(
    const Circuit& explicit_circuit, const Gate& semantic,
    const std::vector<CertificationCase>& cases, double tol) {
  const std::vector<QubitId>& iface = semantic.targets();
  if (!semantic.controls().empty()) {
    throw CertificationError("semantic gate must be uncontrolled");
  }
  std::set<QubitId> in_iface(iface.begin(), iface.end());
  std::vector<QubitId> ancillas;
  for (const auto& q : explicit_circuit.qubits()) {
    if (!in_iface.count(q)) ancillas.push_back(q);
  }
  if (ancillas.size() + iface.size() != explicit_circuit.num_qubits()) {
    throw CertificationError("interface qubits are not all in the circuit");
  }

  std::vector<CertificationCase> all = cases;
  if (cases.size() > 1) {
    std::map<std::uint64_t, Complex> sum;
    for (const auto& c : cases) {
      for (const auto& [i, a] : c.input.entries()) sum[i] += a;
    }
    std::vector<SparseState::Entry> entries;
    double nn = 0.0;
    for (const auto& [i, a] : sum) nn += std::norm(a);
    for (const auto& [i, a] : sum) {
      if (std::abs(a) > 0.0) entries.emplace_back(i, a / std::sqrt(nn));
    }
    if (nn > 0.0) {
      all.push_back({"superposition", SparseState(iface.size(), entries)});
    }
  }

  CertificationResult r;
  for (const auto& c : all) {
    const StateVector input = StateVector::from_sparse(iface, c.input);
    const StateVector expected = apply(input, semantic).padded(ancillas);
    const StateVector got = run(explicit_circuit, input.padded(ancillas));
    const double f = fidelity(expected, got);
    r.min_fidelity = std::min(r.min_fidelity, f);
    ++r.cases;
    if (f < 1.0 - tol && r.failure.empty()) {
      r.failure = c.label + " (fidelity " + std::to_string(f) + ")";
    }
  }
  r.passed = r.failure.empty();
  return r;
}

}  // namespace symprep::sim

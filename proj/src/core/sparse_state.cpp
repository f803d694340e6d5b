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

#include "symprep/core/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symprep {

SparseState::SparseState(std::size_t num_qubits, std::vector<Entry> entries)
    : num_qubits_(num_qubits), entries_(std::move(entries)) {
  if (num_qubits_ > 63) throw PreconditionError("sparse state too wide");
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].first >> num_qubits_) {
      throw PreconditionError("sparse state index out of range");
    }
    if (i > 0 && entries_[i].first == entries_[i - 1].first) {
      throw PreconditionError("sparse state has a repeated index");
    }
  }
}

SparseState SparseState::basis(std::size_t num_qubits, std::uint64_t index) {
  return SparseState(num_qubits, {{index, Complex(1.0, 0.0)}});
}

SparseState SparseState::from_dense(std::size_t num_qubits,
                                    std::span<const Complex> amplitudes) {
  if (amplitudes.size() != (std::size_t{1} << num_qubits)) {
    throw PreconditionError("dense state has the wrong length");
  }
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    if (std::abs(amplitudes[i]) > 1e-15) entries.emplace_back(i, amplitudes[i]);
  }
  return SparseState(num_qubits, std::move(entries));
}

double SparseState::norm() const {
  double s = 0.0;
  for (const auto& [i, a] : entries_) s += std::norm(a);
  return std::sqrt(s);
}

Complex SparseState::amplitude(std::uint64_t index) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), index,
      [](const Entry& e, std::uint64_t v) { return e.first < v; });
  if (it != entries_.end() && it->first == index) return it->second;
  return {};
}

std::vector<Complex> SparseState::to_dense() const {
  std::vector<Complex> out(std::size_t{1} << num_qubits_);
  for (const auto& [i, a] : entries_) out[i] = a;
  return out;
}

void SparseState::require_normalized(double tol) const {
  const double n = norm();
  if (std::abs(n - 1.0) > tol) {
    throw PreconditionError("state is not normalized (norm " +
                            std::to_string(n) + ")");
  }
}

ZeroReflector::ZeroReflector(const SparseState& psi) {
  psi.require_normalized();
  const Complex a0 = psi.amplitude(0);
  if (std::abs(a0) > 1e-15) phase_ = a0 / std::abs(a0);
  // v = e_0 - conj(phase) psi; e_0 component is 1 - |a0| >= 0
  std::vector<SparseState::Entry> v;
  double vv = 0.0;
  bool has_zero = false;
  for (const auto& [i, a] : psi.entries()) {
    Complex c = -std::conj(phase_) * a;
    if (i == 0) {
      c += 1.0;
      has_zero = true;
    }
    vv += std::norm(c);
    v.emplace_back(i, c);
  }
  if (!has_zero) {
    v.insert(v.begin(), {0, Complex(1.0, 0.0)});
    vv += 1.0;
  }
  if (vv < 1e-30) {
    trivial_ = true;
    return;
  }
  const double inv = 1.0 / std::sqrt(vv);
  for (auto& [i, c] : v) {
    if (std::abs(c) > 0.0) w_.emplace_back(i, c * inv);
  }
}

void ZeroReflector::apply(std::span<Complex> block, bool inverse) const {
  const Complex ph = inverse ? std::conj(phase_) : phase_;
  if (!trivial_) {
    Complex s{};
    for (const auto& [i, c] : w_) s += std::conj(c) * block[i];
    for (const auto& [i, c] : w_) block[i] -= 2.0 * c * s;
  }
  if (ph != Complex(1.0, 0.0)) {
    for (auto& b : block) b *= ph;
  }
}

}  // namespace symprep

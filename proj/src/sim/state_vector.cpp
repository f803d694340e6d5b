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

#include "symprep/sim/state_vector.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "symprep/sim/simulator.hpp"

namespace symprep::sim {

StateVector::StateVector(std::vector<QubitId> order,
                         std::vector<Complex> amplitudes)
    : order_(std::move(order)), amps_(std::move(amplitudes)) {
  if (order_.size() > kMaxQubits) {
    throw SimulationError("state of " + std::to_string(order_.size()) +
                          " qubits exceeds the simulator limit of " +
                          std::to_string(kMaxQubits));
  }
  if (amps_.size() != (std::size_t{1} << order_.size())) {
    throw SimulationError("amplitude count does not match qubit count");
  }
  std::set<QubitId> seen(order_.begin(), order_.end());
  if (seen.size() != order_.size()) {
    throw SimulationError("state lists a qubit twice");
  }
}

StateVector StateVector::zero(std::vector<QubitId> order) {
  return basis(std::move(order), 0);
}

StateVector StateVector::basis(std::vector<QubitId> order,
                               std::uint64_t index) {
  if (order.size() > kMaxQubits) {
    throw SimulationError("state of " + std::to_string(order.size()) +
                          " qubits exceeds the simulator limit");
  }
  std::vector<Complex> amps(std::size_t{1} << order.size());
  amps.at(index) = 1.0;
  return StateVector(std::move(order), std::move(amps));
}

StateVector StateVector::from_sparse(std::vector<QubitId> order,
                                     const SparseState& state) {
  if (order.size() != state.num_qubits()) {
    throw SimulationError("sparse state width differs from qubit list");
  }
  if (order.size() > kMaxQubits) {
    throw SimulationError("state exceeds the simulator limit");
  }
  return StateVector(std::move(order), state.to_dense());
}

int StateVector::position(QubitId q) const {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] == q) return static_cast<int>(i);
  }
  return -1;
}

std::uint64_t StateVector::mask_of(const std::vector<QubitId>& qubits) const {
  std::uint64_t m = 0;
  for (const auto& q : qubits) {
    const int p = position(q);
    if (p < 0) {
      throw SimulationError("qubit " + std::to_string(q.index) +
                            " is not part of the state");
    }
    m |= std::uint64_t{1} << p;
  }
  return m;
}

double StateVector::norm() const { return std::sqrt(norm_squared(amps_)); }

StateVector StateVector::reordered(const std::vector<QubitId>& order) const {
  if (order.size() != order_.size()) {
    throw SimulationError("reorder: qubit sets differ");
  }
  std::vector<int> src(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    src[i] = position(order[i]);
    if (src[i] < 0) throw SimulationError("reorder: qubit sets differ");
  }
  std::vector<Complex> out(amps_.size());
  for (std::uint64_t j = 0; j < out.size(); ++j) {
    std::uint64_t i = 0;
    for (std::size_t b = 0; b < order.size(); ++b) {
      if ((j >> b) & 1) i |= std::uint64_t{1} << src[b];
    }
    out[j] = amps_[i];
  }
  return StateVector(order, std::move(out));
}

StateVector StateVector::tensor(const StateVector& other) const {
  std::vector<QubitId> order = order_;
  order.insert(order.end(), other.order_.begin(), other.order_.end());
  if (order.size() > kMaxQubits) {
    throw SimulationError("tensor product exceeds the simulator limit");
  }
  std::vector<Complex> out(std::size_t{1} << order.size());
  const std::size_t shift = order_.size();
  for (std::size_t j = 0; j < other.amps_.size(); ++j) {
    if (other.amps_[j] == Complex{}) continue;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
      out[i | (j << shift)] = amps_[i] * other.amps_[j];
    }
  }
  return StateVector(std::move(order), std::move(out));
}

StateVector StateVector::padded(const std::vector<QubitId>& extra) const {
  return tensor(StateVector::zero(extra));
}

StateVector StateVector::restricted(const std::vector<QubitId>& keep) const {
  std::vector<int> pos(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    pos[i] = position(keep[i]);
    if (pos[i] < 0) throw SimulationError("restrict: unknown qubit");
  }
  std::vector<Complex> out(std::size_t{1} << keep.size());
  for (std::uint64_t j = 0; j < out.size(); ++j) {
    std::uint64_t i = 0;
    for (std::size_t b = 0; b < keep.size(); ++b) {
      if ((j >> b) & 1) i |= std::uint64_t{1} << pos[b];
    }
    out[j] = amps_[i];
  }
  return StateVector(keep, std::move(out));
}

std::vector<double> StateVector::distribution(
    const std::vector<QubitId>& qubits) const {
  std::vector<int> pos(qubits.size());
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    pos[i] = position(qubits[i]);
    if (pos[i] < 0) throw SimulationError("distribution: unknown qubit");
  }
  std::vector<double> out(std::size_t{1} << qubits.size());
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) continue;
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if ((i >> pos[b]) & 1) v |= std::uint64_t{1} << b;
    }
    out[v] += p;
  }
  return out;
}

SparseState StateVector::to_sparse() const {
  return SparseState::from_dense(order_.size(), amps_);
}

std::string dump_state(const StateVector& state) {
  std::string out;
  const auto amps = state.amplitudes();
  const std::size_t n = state.num_qubits();
  char buf[96];
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    if (std::abs(amps[i]) <= 1e-12) continue;
    std::string bits(n, '0');
    for (std::size_t b = 0; b < n; ++b) {
      if ((i >> b) & 1) bits[b] = '1';
    }
    std::snprintf(buf, sizeof(buf), " %.15e %.15e\n", amps[i].real(),
                  amps[i].imag());
    out += bits;
    out += buf;
  }
  return out;
}

}  // namespace symprep::sim

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

#include "symprep/prim/adjust.hpp"

#include <bit>
#include <cmath>

#include "symprep/core/matrices.hpp"
#include "symprep/prim/amplify.hpp"
#include "symprep/sim/simulator.hpp"

namespace symprep::prim {

namespace {

void check_branches(BuildContext& ctx, const BranchPreparation& prep) {
  if (!ctx.should_simulate(prep.circuit.num_qubits())) return;
  const sim::StateVector s = sim::run_from_zero(prep.circuit);
  std::vector<std::uint64_t> bit;
  for (const auto& q : prep.onehot) {
    bit.push_back(std::uint64_t{1} << s.position(q));
  }
  const std::uint64_t mask = s.mask_of(prep.onehot);
  std::vector<double> mass(prep.onehot.size(), 0.0);
  const auto amps = s.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p < 1e-20) continue;
    if (std::popcount(i & mask) != 1) {
      throw PreconditionError("adjust: branch register is not one-hot");
    }
    for (std::size_t j = 0; j < bit.size(); ++j) {
      if (i & bit[j]) mass[j] += p;
    }
  }
  for (std::size_t j = 0; j < mass.size(); ++j) {
    if (std::abs(mass[j] - dist::to_double(prep.alpha[j])) > 1e-10) {
      throw PreconditionError("adjust: branch " + std::to_string(j + 1) +
                              " has mass " + std::to_string(mass[j]));
    }
  }
}

}  // namespace

Circuit adjust_amplitudes(BuildContext& ctx, const BranchPreparation& prep,
                          const std::vector<dist::Rational>& beta,
                          const std::string& site) {
  const std::size_t n = prep.onehot.size();
  if (n == 0 || beta.size() != n || prep.alpha.size() != n) {
    throw PreconditionError("adjust: need one alpha and one beta per branch");
  }
  dist::Rational z = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (beta[i] < 0 || beta[i] > 1) {
      throw PreconditionError("adjust: beta outside [0, 1]");
    }
    z += prep.alpha[i] * beta[i];
  }
  if (z == 0) throw PreconditionError("adjust: Z = 0, nothing survives");
  check_branches(ctx, prep);

  CircuitBuilder b(prep.circuit);
  const Register a = b.add_register("adj_a", n);
  const Register q = b.add_register("adj_q", 1);
  for (const auto& x : a.qubits) b.add(Gate::unitary(x, mat::pauli_x(), "x"));
  for (std::size_t i = 0; i < n; ++i) {
    // |1> -> sqrt(1 - beta)|0> + sqrt(beta)|1> on branch i
    b.add(Gate::controlled_hermitian({prep.onehot[i]}, a[i],
                                     mat::flipped_rot(dist::to_double(beta[i])),
                                     "adj_rot"));
  }
  b.add(Gate::and_gate(a.qubits, q[0]));

  MarkedPreparation mp{b.build(), {q[0]}, dist::to_double(z), z};
  CircuitBuilder out(amplify_to_exact(ctx, mp, site));
  for (const auto& x : a.qubits) out.add(Gate::unitary(x, mat::pauli_x(), "x"));
  return out.build();
}

sim::StateVector reweighted(const sim::StateVector& prepared,
                            const std::vector<QubitId>& onehot,
                            const std::vector<double>& beta) {
  std::vector<Complex> amps(prepared.amplitudes().begin(),
                            prepared.amplitudes().end());
  double z = 0.0;
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    for (std::size_t j = 0; j < onehot.size(); ++j) {
      if ((i >> prepared.position(onehot[j])) & 1) {
        amps[i] *= std::sqrt(beta[j]);
        break;
      }
    }
    z += std::norm(amps[i]);
  }
  for (auto& x : amps) x /= std::sqrt(z);
  return sim::StateVector(prepared.qubit_order(), std::move(amps));
}

}  // namespace symprep::prim

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

#include "symprep/synth/damped.hpp"

#include <bit>
#include <cmath>
#include <memory>

#include "symprep/core/matrices.hpp"
#include "symprep/dist/damped_binomial.hpp"
#include "symprep/prim/adjust.hpp"
#include "symprep/prim/amplify.hpp"
#include "symprep/prim/controlled.hpp"
#include "symprep/prim/hamming.hpp"

namespace symprep::synth {

namespace {

void check_mk(int m, int k) {
  if (k < 1 || k > m || m > 40) {
    throw DomainError("damped state needs 1 <= k <= m <= 40, got m=" +
                      std::to_string(m) + " k=" + std::to_string(k));
  }
}

// amplitude per weight, zero outside 1..k
std::vector<double> damped_amps(int m, int k) {
  const dist::DampedBinomial d = dist::damped_binomial(m, k);
  std::vector<double> a(static_cast<std::size_t>(m) + 1, 0.0);
  for (int j = 1; j <= k; ++j) {
    a[static_cast<std::size_t>(j)] =
        std::sqrt(dist::to_double(d.s[static_cast<std::size_t>(j)] /
                                  dist::Rational(dist::binomial(m, j))));
  }
  return a;
}

SparseState by_weight(int m, const std::vector<double>& amp) {
  std::vector<SparseState::Entry> e;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    const double a = amp[static_cast<std::size_t>(std::popcount(x))];
    if (a != 0.0) e.emplace_back(x, a);
  }
  return SparseState(static_cast<std::size_t>(m), std::move(e));
}

}  // namespace

SparseState damped_state(int m, int k) {
  check_mk(m, k);
  return by_weight(m, damped_amps(m, k));
}

SparseState zero_damped_state(int m, int k) {
  check_mk(m, k);
  const double gamma = dist::to_double(dist::zero_shift(m, k).gamma);
  auto amp = damped_amps(m, k);
  for (auto& a : amp) a *= std::sqrt(gamma);
  amp[0] = std::sqrt(1.0 - gamma);
  return by_weight(m, amp);
}

Circuit prepare_zero_damped(prim::BuildContext& ctx, int m, int k) {
  check_mk(m, k);
  const dist::ZeroShift zs = dist::zero_shift(m, k);
  const auto ku = static_cast<std::size_t>(k);

  CircuitBuilder b(ctx.fanout_budget());
  const Register x = b.add_register("x", static_cast<std::size_t>(m));
  const Register h = b.add_register("h", ku + 1);
  const Register z = b.add_register("z", 1);
  const double bias = 1.0 - 1.0 / m;
  for (const auto& q : x.qubits) b.add(Gate::unitary(q, mat::rot(bias), "coin"));
  const LibraryOp ham = prim::ham_op(ctx, m, k);
  const Gate ham_gate = ham.on(concat({x.qubits, h.qubits}));
  b.add(ham_gate);
  b.add(Gate::unitary(h[k], mat::pauli_x(), "x"));

  // keep weights 0..k
  prim::MarkedPreparation trunc{b.build(), {h[k]},
                                dist::to_double(zs.truncation_mass),
                                zs.truncation_mass};
  CircuitBuilder c(prim::amplify_to_exact(ctx, trunc, "truncate"));
  const std::vector<QubitId> low(h.qubits.begin(), h.qubits.end() - 1);
  c.add(Gate::nor_gate(low, z[0]));

  prim::BranchPreparation bp{c.build(), concat({low, z.qubits}), {}};
  std::vector<dist::Rational> beta;
  for (std::size_t j = 1; j <= ku; ++j) {
    bp.alpha.push_back(zs.alpha[j]);
    beta.push_back(zs.beta[j]);
  }
  bp.alpha.push_back(zs.alpha[0]);
  beta.push_back(zs.beta[0]);

  CircuitBuilder d(prim::adjust_amplitudes(ctx, bp, beta, "adjust"));
  d.add(Gate::nor_gate(low, z[0]));
  d.add(ham_gate);
  d.metadata().output_register = "x";
  return d.build();
}

LibraryOp zero_damped_op(prim::BuildContext& ctx, int m, int k) {
  const Circuit c = prepare_zero_damped(ctx, m, k);
  auto map = std::make_shared<StatePrepMap>(
      static_cast<std::size_t>(m), [m, k] { return zero_damped_state(m, k); });
  return prim::semantic_op("zero_damped", map, c);
}

Circuit ctrl_damped(prim::BuildContext& ctx, int m, int k) {
  check_mk(m, k);
  prim::BuildContext::Scope scope(ctx, "damped");
  if (m == 1) {
    CircuitBuilder b(ctx.fanout_budget());
    const Register x = b.add_register("x", 1);
    b.add(Gate::unitary(x[0], mat::pauli_x(), "x"));
    return prim::ctrl_circuit(ctx, b.build());
  }
  CircuitBuilder b(ctx.fanout_budget());
  const Register x = b.add_register("x", static_cast<std::size_t>(m));
  b.add(zero_damped_op(ctx, m, k).on(x.qubits));
  const dist::ZeroShift zs = dist::zero_shift(m, k);
  return prim::ctrl_from_zero_overlap(ctx, b.build(), x.qubits, 1 - zs.gamma);
}

LibraryOp ctrl_damped_op(prim::BuildContext& ctx, int m, int k) {
  const Circuit c = ctrl_damped(ctx, m, k);
  auto make = [m, k] {
    return std::vector<ControlledPrepMap::Branch>{{1, damped_state(m, k)}};
  };
  auto map = std::make_shared<ControlledPrepMap>(
      1, static_cast<std::size_t>(m), ControlledPrepMap::Domain::Any, make);
  return prim::semantic_op("ctrl_damped", map, c);
}

}  // namespace symprep::synth

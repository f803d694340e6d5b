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

#include "symprep/prim/controlled.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "symprep/core/matrices.hpp"
#include "symprep/prim/amplify.hpp"
#include "symprep/sim/simulator.hpp"

namespace symprep::prim {

Circuit ctrl_circuit(BuildContext& /*ctx*/, const Circuit& c,
                     std::optional<std::size_t> max_gates) {
  if (max_gates && c.gate_count() > *max_gates) {
    throw PreconditionError("ctrl_circuit: " + std::to_string(c.gate_count()) +
                            " gates, limit " + std::to_string(*max_gates));
  }
  std::size_t width = 1;
  for (const auto& layer : c.layers()) width = std::max(width, layer.size());

  const Circuit shell = Circuit::create(c.registers(), c.fanout_budget(),
                                        c.metadata());
  CircuitBuilder b(shell);
  const Register ctl = b.add_register("ctl", 1);
  std::vector<QubitId> holders = {ctl[0]};
  std::vector<Gate> tree;
  if (width > 1) {
    const Register copies = b.add_register("ctl_copies", width - 1);
    const auto budget = static_cast<std::size_t>(c.fanout_budget());
    std::size_t next = 0;
    while (holders.size() < width) {
      // every current holder copies itself up to the budget
      const std::vector<QubitId> round = holders;
      for (const auto& h : round) {
        std::vector<QubitId> fresh;
        while (fresh.size() < budget && next < copies.size()) {
          fresh.push_back(copies[next++]);
        }
        if (fresh.empty()) break;
        tree.push_back(Gate::fanout(h, fresh));
        holders.insert(holders.end(), fresh.begin(), fresh.end());
      }
    }
  }
  b.add_all(tree);
  for (const auto& layer : c.layers()) {
    for (std::size_t i = 0; i < layer.size(); ++i) {
      b.add(layer[i].with_controls({holders[i]}));
    }
  }
  for (auto it = tree.rbegin(); it != tree.rend(); ++it) b.add(*it);
  return b.build();
}

Circuit w_controlled_swap(BuildContext& ctx, int t, int s) {
  CircuitBuilder b(ctx.fanout_budget());
  const Register sel = b.add_register("sel", static_cast<std::size_t>(t));
  std::vector<QubitId> slots;
  for (int i = 1; i <= t; ++i) {
    const Register q =
        b.add_register("q" + std::to_string(i), static_cast<std::size_t>(s));
    slots.insert(slots.end(), q.qubits.begin(), q.qubits.end());
  }
  const Register target = b.add_register("target", static_cast<std::size_t>(s));
  b.add(w_swap_op(t, s).on(concat({sel.qubits, slots, target.qubits})));
  return b.build();
}

Circuit ctrl_dicke(BuildContext& ctx, int ell, const std::vector<int>& weights) {
  if (weights.empty() || ell < 1) {
    throw PreconditionError("ctrl_dicke: need ell >= 1 and some weights");
  }
  const auto k = weights.size();
  const auto s = static_cast<std::size_t>(ell);
  CircuitBuilder b(ctx.fanout_budget());
  const Register sel = b.add_register("sel", k);
  const Register t = b.add_register("t", s);
  std::vector<QubitId> slots;
  for (std::size_t i = 0; i < k; ++i) {
    if (weights[i] < 0 || weights[i] > ell) {
      throw PreconditionError("ctrl_dicke: weight outside [0, ell]");
    }
    const Register q = b.add_register("q" + std::to_string(i + 1), s);
    slots.insert(slots.end(), q.qubits.begin(), q.qubits.end());
    if (weights[i] > 0) {
      b.add(dicke_prep_op(ell, weights[i]).on(q.qubits).with_controls({sel[i]}));
    }
  }
  b.add(w_swap_op(static_cast<int>(k), ell)
            .on(concat({sel.qubits, slots, t.qubits})));
  return b.build();
}

LibraryOp ctrl_dicke_op(BuildContext& ctx, int ell,
                        const std::vector<int>& weights) {
  const Circuit c = ctrl_dicke(ctx, ell, weights);
  auto make = [ell, weights] {
    std::vector<ControlledPrepMap::Branch> br;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      br.push_back({std::uint64_t{1} << i, dicke_state(ell, weights[i])});
    }
    return br;
  };
  auto map = std::make_shared<ControlledPrepMap>(
      weights.size(), static_cast<std::size_t>(ell),
      ControlledPrepMap::Domain::WeightAtMostOne, make);
  return semantic_op("ctrl_dicke", map, c);
}

Circuit ctrl_state(BuildContext& ctx, const Circuit& prep,
                   const std::vector<QubitId>& target, QubitId branch) {
  if (std::find(target.begin(), target.end(), branch) != target.end()) {
    throw PreconditionError("ctrl_state: branch qubit is part of the target");
  }
  if (ctx.should_simulate(prep.num_qubits())) {
    const double m = marked_mass(sim::run_from_zero(prep), {branch});
    if (std::abs(m - 0.5) > 1e-9) {
      throw PreconditionError("ctrl_state: branch qubit has mass " +
                              std::to_string(m) + ", expected 1/2");
    }
  }
  // U|0> = (|phi_0>|0>_b|1>_x - |phi_1>|1>_b|0>_x)/sqrt 2
  CircuitBuilder u(prep);
  const Register x = u.add_register("ctl", 1);
  u.add(Gate::unitary(x[0], mat::pauli_x(), "x"));
  u.add(Gate::cnot(branch, x[0]));
  u.add(Gate::unitary(branch, mat::pauli_z(), "z"));
  const Circuit uc = u.build();

  CircuitBuilder b(Circuit::create(uc.registers(), uc.fanout_budget(),
                                   prep.metadata()));
  b.append(prep);
  // reflection about U|0> swaps the two mismatched branches
  b.append(uc.inverse());
  b.add(Gate::zero_reflection(uc.qubits()));
  b.append(uc);
  b.add(Gate::unitary(x[0], mat::hadamard(), "h"));
  b.add(Gate::swap(x[0], branch));
  return b.build();
}

Circuit ctrl_from_zero_overlap(BuildContext& ctx, const Circuit& prep,
                               const std::vector<QubitId>& target,
                               const dist::Rational& alpha, double floor) {
  const double a = dist::to_double(alpha);
  if (a < floor || 1.0 - a < floor) {
    throw PreconditionError("ctrl_from_zero_overlap: alpha " +
                            std::to_string(a) + " too close to 0 or 1");
  }
  if (ctx.should_simulate(prep.num_qubits())) {
    const sim::StateVector s = sim::run_from_zero(prep);
    const double zero = std::norm(s.amplitude(0));
    if (std::abs(zero - a) > 1e-10) {
      throw PreconditionError(
          "ctrl_from_zero_overlap: overlap with zero is " +
          std::to_string(zero) + ", declared " + std::to_string(a));
    }
  }
  const bool low = alpha <= dist::Rational(1, 2);
  const dist::Rational rho = low ? dist::Rational(alpha / (1 - alpha))
                                 : dist::Rational((1 - alpha) / alpha);
  auto zero_test = [&](QubitId out) {
    return low ? Gate::or_gate(target, out) : Gate::nor_gate(target, out);
  };

  CircuitBuilder b(prep);
  const Register tag = b.add_register("zo_tag", 1);
  const Register flag = b.add_register("zo_flag", 1);
  b.add(zero_test(tag[0]));
  b.add(Gate::unitary(flag[0], mat::pauli_x(), "x"));
  b.add(Gate::controlled_hermitian({tag[0]}, flag[0],
                                   mat::flipped_rot(dist::to_double(rho)),
                                   "balance_rot"));
  b.add(zero_test(tag[0]));
  const dist::Rational mass =
      2 * (low ? alpha : dist::Rational(1 - alpha));
  MarkedPreparation mp{b.build(), {flag[0]}, dist::to_double(mass), mass};

  CircuitBuilder c0(amplify_to_exact(ctx, mp, "balance"));
  const Register br = c0.add_register("zo_branch", 1);
  c0.add(Gate::or_gate(target, br[0]));
  return ctrl_state(ctx, c0.build(), target, br[0]);
}

}  // namespace symprep::prim

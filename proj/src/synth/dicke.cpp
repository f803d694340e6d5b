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

#include "symprep/synth/dicke.hpp"

#include <memory>

#include "symprep/core/library.hpp"
#include "symprep/core/matrices.hpp"
#include "symprep/dist/occupancy.hpp"
#include "symprep/prim/amplify.hpp"
#include "symprep/prim/controlled.hpp"
#include "symprep/prim/hamming.hpp"
#include "symprep/prim/onehot.hpp"
#include "symprep/synth/damped.hpp"

namespace symprep::synth {

namespace {

std::vector<QubitId> bucket(const std::vector<QubitId>& T, int m, int i) {
  return {T.begin() + i * m, T.begin() + (i + 1) * m};
}

void check_layout(std::size_t n, int k, int ell) {
  if (ell < 1 || n % static_cast<std::size_t>(ell) != 0) {
    throw DomainError("occupancy: ell=" + std::to_string(ell) +
                      " must divide n=" + std::to_string(n));
  }
  const int m = static_cast<int>(n) / ell;
  if (k < 1 || k > ell || k > m) {
    throw DomainError("occupancy: need 1 <= k <= min(ell, m), got k=" +
                      std::to_string(k) + " ell=" + std::to_string(ell) +
                      " m=" + std::to_string(m));
  }
}

}  // namespace

Circuit occupancy_stage(prim::BuildContext& ctx, const Circuit& base,
                        const std::vector<QubitId>& T, int k, int ell) {
  check_layout(T.size(), k, ell);
  const int n = static_cast<int>(T.size());
  const int m = n / ell;
  prim::BuildContext::Scope scope(ctx, "occupancy");
  const dist::OccupancyModel occ = dist::ratio_report(n, k, ell);

  // delta_j^2 = r(j) / R over j = 1..k
  std::vector<dist::Rational> delta;
  for (int j = 1; j <= k; ++j) {
    delta.push_back(occ.r[static_cast<std::size_t>(j)] / occ.R);
  }
  std::vector<int> weights;
  for (int j = 1; j <= k; ++j) weights.push_back(j);

  CircuitBuilder b(base);
  const Register A = b.add_register("A", static_cast<std::size_t>(k));
  const Register B = b.add_register("B", static_cast<std::size_t>(ell));
  const Register mark = b.add_register("mark", 1);
  {
    prim::BuildContext::Scope s(ctx, "onehot");
    b.add(prim::onehot_dist_op(ctx, delta).on(A.qubits));
  }
  b.add(prim::ctrl_dicke_op(ctx, ell, weights).on(concat({A.qubits, B.qubits})));
  const LibraryOp damp = ctrl_damped_op(ctx, m, k);
  for (int i = 0; i < ell; ++i) {
    b.add(damp.on(concat({{B[static_cast<std::size_t>(i)]}, bucket(T, m, i)})));
  }
  for (int i = 0; i < ell; ++i) {
    b.add(Gate::or_gate(bucket(T, m, i), B[static_cast<std::size_t>(i)]));
  }
  b.add(exact_op(n, k).on(concat({T, mark.qubits})));

  const dist::Rational alpha = 1 / occ.R;
  prim::MarkedPreparation mp{b.build(), {mark[0]}, dist::to_double(alpha),
                             alpha};
  return prim::amplify_to_exact(ctx, mp, "amplify");
}

Circuit clear_occupancy(prim::BuildContext& ctx, const Circuit& c,
                        const std::vector<QubitId>& T, int k, int ell) {
  const int m = static_cast<int>(T.size()) / ell;
  CircuitBuilder b(c);
  const Register& A = b.reg("A");
  const Register& B = b.reg("B");
  const Register& mark = b.reg("mark");
  for (int i = 0; i < ell; ++i) {
    b.add(Gate::or_gate(bucket(T, m, i), B[static_cast<std::size_t>(i)]));
  }
  // occupancy is 1..k, so the overflow slot of HAM stays zero
  b.add(prim::ham_op(ctx, ell, k).on(concat({B.qubits, A.qubits, mark.qubits})));
  b.note_recycled(1);
  for (int i = 0; i < ell; ++i) {
    b.add(Gate::or_gate(bucket(T, m, i), B[static_cast<std::size_t>(i)]));
  }
  return b.build();
}

SynthesisOutput build_occupancy_state(prim::BuildContext& ctx, int n, int k,
                                      int ell) {
  CircuitBuilder b(ctx.fanout_budget());
  const Register T = b.add_register("T", static_cast<std::size_t>(n));
  b.metadata().n = n;
  b.metadata().k = k;
  b.metadata().ell = ell;
  b.metadata().output_register = "T";
  const Circuit c = occupancy_stage(ctx, b.build(), T.qubits, k, ell);
  SynthesisOutput out{c, cost(c), occupancy_target(n, k, ell),
                      concat({T.qubits, c.reg("A").qubits})};
  return out;
}

SynthesisOutput build_dicke(prim::BuildContext& ctx, int n, int k,
                            std::optional<int> ell) {
  if (k < 0 || k > n) {
    throw DomainError("dicke: need 0 <= k <= n, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  CircuitBuilder b(ctx.fanout_budget());
  const Register T = b.add_register("T", static_cast<std::size_t>(n));
  b.metadata().n = n;
  b.metadata().k = k;
  b.metadata().output_register = "T";
  if (k == 0) {
    const Circuit c = b.build();
    return {c, cost(c), dicke_state(n, 0), T.qubits};
  }
  const BucketPlan plan = plan_buckets(n, k, ell);
  b.metadata().ell = plan.ell;
  std::vector<QubitId> all = T.qubits;
  std::vector<QubitId> pad;
  if (plan.n_prime > n) {
    pad = b.add_register("pad", static_cast<std::size_t>(plan.n_prime - n))
              .qubits;
    all = concat({T.qubits, pad});
  }
  prim::BuildContext::Scope scope(ctx, "dicke");
  Circuit c = occupancy_stage(ctx, b.build(), all, k, plan.ell);
  c = clear_occupancy(ctx, c, all, k, plan.ell);
  if (!pad.empty()) {
    // the tail of |D^n'_k> is all zero with probability C(n,k)/C(n',k)
    CircuitBuilder p(c);
    const Register flag = p.add_register("pad_flag", 1);
    p.add(Gate::nor_gate(pad, flag[0]));
    const dist::Rational alpha = dist::dicke_tail_zero_prob(plan.n_prime, n, k);
    prim::MarkedPreparation mp{p.build(), {flag[0]}, dist::to_double(alpha),
                               alpha};
    c = prim::amplify_to_exact(ctx, mp, "pad");
  }
  return {c, cost(c), dicke_state(n, k), T.qubits};
}

SynthesisOutput build_dicke_flipped(prim::BuildContext& ctx, int n, int k,
                                    std::optional<int> ell) {
  const SynthesisOutput base = build_dicke(ctx, n, k, ell);
  CircuitBuilder b(base.circuit);
  for (const auto& q : base.data) b.add(Gate::unitary(q, mat::pauli_x(), "x"));
  const Circuit c = b.build();
  return {c, cost(c), dicke_state(n, n - k), base.data};
}

}  // namespace symprep::synth

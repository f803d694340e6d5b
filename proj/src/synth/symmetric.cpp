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

#include "symprep/synth/symmetric.hpp"

#include <algorithm>
#include <cmath>

#include "symprep/core/library.hpp"
#include "symprep/dist/occupancy.hpp"
#include "symprep/prim/amplify.hpp"
#include "symprep/prim/controlled.hpp"
#include "symprep/prim/hamming.hpp"
#include "symprep/prim/onehot.hpp"
#include "symprep/synth/damped.hpp"
#include "symprep/synth/dicke.hpp"

namespace symprep::synth {

namespace {

std::vector<QubitId> slice(const std::vector<QubitId>& v, std::size_t from,
                           std::size_t count) {
  return {v.begin() + static_cast<std::ptrdiff_t>(from),
          v.begin() + static_cast<std::ptrdiff_t>(from + count)};
}

}  // namespace

SynthesisOutput build_symmetric(prim::BuildContext& ctx, int n,
                                const std::vector<Complex>& eta_in,
                                std::optional<int> ell) {
  const SparseState target = symmetric_target(n, eta_in);
  std::vector<Complex> eta = eta_in;
  while (eta.size() > 1 && eta.back() == Complex{}) eta.pop_back();
  const int k_star = static_cast<int>(eta.size()) - 1;

  CircuitBuilder b(ctx.fanout_budget());
  const Register T = b.add_register("T", static_cast<std::size_t>(n));
  b.metadata().n = n;
  b.metadata().k = k_star;
  b.metadata().output_register = "T";
  b.metadata().eta = eta_in;
  if (k_star == 0) {
    // only |0^n> up to a global phase
    const Circuit c = b.build();
    return {c, cost(c), target, T.qubits};
  }
  const BucketPlan plan = plan_buckets(n, k_star, ell);
  b.metadata().ell = plan.ell;
  const int np = plan.n_prime;
  const int m = plan.m;
  std::vector<QubitId> all = T.qubits;
  std::vector<QubitId> pad;
  if (np > n) {
    pad = b.add_register("pad", static_cast<std::size_t>(np - n)).qubits;
    all = concat({T.qubits, pad});
  }

  // weights for n' qubits so the zero-tail component is proportional to eta
  std::vector<Complex> eta_p = eta;
  dist::Rational z_pad = 1;
  if (np > n) {
    double z = 0.0;
    z_pad = 0;
    for (int k = 0; k <= k_star; ++k) {
      const dist::Rational p0 = dist::dicke_tail_zero_prob(np, n, k);
      const auto ku = static_cast<std::size_t>(k);
      z += std::norm(eta[ku]) / dist::to_double(p0);
      eta_p[ku] = eta[ku] / std::sqrt(dist::to_double(p0));
      z_pad += dist::Rational(std::norm(eta[ku])) / p0;
    }
    for (auto& e : eta_p) e /= std::sqrt(z);
  }

  const dist::SymmetricR sr = dist::symmetric_R(np, k_star, plan.ell, eta_p);
  const int bits = binary_width(k_star);
  const auto bu = static_cast<std::size_t>(bits);
  std::vector<Complex> delta(std::size_t{1} << (2 * bits));
  delta[0] = eta_p[0] / std::sqrt(sr.normalizer);
  for (int k = 1; k <= k_star; ++k) {
    if (eta_p[static_cast<std::size_t>(k)] == Complex{}) continue;
    const dist::OccupancyModel occ = dist::ratio_report(np, k, plan.ell, k_star);
    for (int j = 1; j < static_cast<int>(occ.r.size()); ++j) {
      const double r = dist::to_double(occ.r[static_cast<std::size_t>(j)]);
      delta[(static_cast<std::size_t>(k) << bits) | static_cast<std::size_t>(j)] =
          eta_p[static_cast<std::size_t>(k)] * std::sqrt(r / sr.normalizer);
    }
  }

  prim::BuildContext::Scope scope(ctx, "symmetric");
  const auto ks = static_cast<std::size_t>(k_star);
  const Register Q = b.add_register("Q", ks);
  const Register A = b.add_register("A", ks);
  const Register B = b.add_register("B", static_cast<std::size_t>(plan.ell));
  const Register S = b.add_register("S", 2 * bu);
  const Register mark = b.add_register("mark", 1);
  {
    prim::BuildContext::Scope s(ctx, "pairs");
    b.add(prim::small_state_op(ctx, delta).on(S.qubits));
  }
  const std::vector<QubitId> s_low = slice(S.qubits, 0, bu);
  const std::vector<QubitId> s_high = slice(S.qubits, bu, bu);
  b.add(one_hot_op(k_star).on(concat({s_high, Q.qubits})));
  b.add(one_hot_op(k_star).on(concat({s_low, A.qubits})));
  std::vector<int> weights;
  for (int j = 1; j <= k_star; ++j) weights.push_back(j);
  b.add(prim::ctrl_dicke_op(ctx, plan.ell, weights)
            .on(concat({A.qubits, B.qubits})));
  {
    prim::BuildContext::Scope s(ctx, "occupancy");
    const LibraryOp damp = ctrl_damped_op(ctx, m, k_star);
    for (int i = 0; i < plan.ell; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      b.add(damp.on(concat({{B[iu]}, slice(all, iu * m, m)})));
    }
  }
  for (int i = 0; i < plan.ell; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    b.add(Gate::or_gate(slice(all, iu * m, m), B[iu]));
  }
  // branch k keeps strings of weight exactly k; k = 0 has T at zero
  b.add(prim::custom_threshold_op(ctx, np, k_star, prim::Ladder::Eq)
            .on(concat({Q.qubits, all, mark.qubits})));
  b.add(Gate::nor_gate(Q.qubits, mark[0]));

  const double alpha = 1.0 / sr.normalizer;
  prim::MarkedPreparation mp{b.build(), {mark[0]}, alpha, std::nullopt};
  CircuitBuilder c(prim::amplify_to_exact(ctx, mp, "amplify"));
  c.add(prim::ham_op(ctx, np, k_star).on(concat({all, Q.qubits, mark.qubits})));
  c.note_recycled(1);
  Circuit out = clear_occupancy(ctx, c.build(), all, k_star, plan.ell);

  if (!pad.empty()) {
    CircuitBuilder p(out);
    const Register flag = p.add_register("pad_flag", 1);
    p.add(Gate::nor_gate(pad, flag[0]));
    const dist::Rational a = 1 / z_pad;
    prim::MarkedPreparation pm{p.build(), {flag[0]}, dist::to_double(a), a};
    out = prim::amplify_to_exact(ctx, pm, "pad");
  }
  return {out, cost(out), target, T.qubits};
}

SynthesisOutput synthesize(const SynthesisRequest& request,
                           prim::BuildOptions options) {
  options.fanout_budget =
      request.fanout_budget.value_or(std::max(request.k, 1));
  prim::BuildContext ctx(options);
  if (request.eta) return build_symmetric(ctx, request.n, *request.eta, request.ell);
  return build_dicke(ctx, request.n, request.k, request.ell);
}

}  // namespace symprep::synth

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

#include "symprep/prim/onehot.hpp"

#include <cmath>
#include <memory>

#include "symprep/core/matrices.hpp"
#include "symprep/prim/adjust.hpp"
#include "symprep/prim/parallel.hpp"

namespace symprep::prim {

namespace {

void check_pmf(const std::vector<dist::Rational>& p) {
  if (p.empty()) throw PreconditionError("one-hot pmf is empty");
  dist::Rational sum = 0;
  for (const auto& x : p) {
    if (x < 0) throw PreconditionError("one-hot pmf has a negative entry");
    sum += x;
  }
  if (sum != 1) {
    throw PreconditionError("one-hot pmf sums to " + dist::to_string(sum));
  }
}

std::size_t log2_exact(std::size_t n) {
  std::size_t l = 0;
  while ((std::size_t{1} << l) < n) ++l;
  if ((std::size_t{1} << l) != n) {
    throw PreconditionError("small state size is not a power of two");
  }
  return l;
}

}  // namespace

Circuit build_zero_w(BuildContext& ctx, int n) {
  CircuitBuilder b(ctx.fanout_budget());
  const Register x = b.add_register("x", static_cast<std::size_t>(n));
  b.add(zero_w_op(n).on(x.qubits));
  b.metadata().output_register = "x";
  return b.build();
}

SparseState onehot_dist_state(const std::vector<dist::Rational>& p) {
  check_pmf(p);
  std::vector<SparseState::Entry> e;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0) e.emplace_back(std::uint64_t{1} << i, std::sqrt(dist::to_double(p[i])));
  }
  return SparseState(p.size(), std::move(e));
}

Circuit onehot_base(BuildContext& ctx, const std::vector<dist::Rational>& p) {
  check_pmf(p);
  const int n = static_cast<int>(p.size());
  CircuitBuilder b(ctx.fanout_budget());
  const Register t = b.add_register("t", p.size());
  const Register a = b.add_register("a", 1);
  const Register bin =
      b.add_register("bin", static_cast<std::size_t>(binary_width(n - 1)));
  b.add(zero_w_op(n).on(t.qubits));
  b.add(Gate::nor_gate(t.qubits, a[0]));

  // branches e_1..e_n on t and the all-zero branch on a
  BranchPreparation bp{b.build(), concat({t.qubits, a.qubits}), {}};
  std::vector<dist::Rational> beta;
  for (int i = 0; i < n; ++i) {
    bp.alpha.emplace_back(1, 2 * n);
    beta.push_back(p[static_cast<std::size_t>(i)]);
  }
  bp.alpha.emplace_back(1, 2);
  beta.emplace_back(1);

  // e_i becomes bin = i - 1; e_1 is left on t[0] and cleared below
  CircuitBuilder c(adjust_amplitudes(ctx, bp, beta, "adjust"));
  const std::vector<QubitId> rest(t.qubits.begin() + 1, t.qubits.end());
  c.add(one_hot_op(n - 1).on(concat({bin.qubits, rest})).inverse());
  c.add(Gate::unitary(a[0], mat::pauli_x(), "x"));
  for (const auto& q : bin.qubits) c.add(Gate::unitary(q, mat::pauli_x(), "x"));
  c.add(Gate::and_gate(concat({bin.qubits, a.qubits}), t[0]));
  for (const auto& q : bin.qubits) c.add(Gate::unitary(q, mat::pauli_x(), "x"));
  return c.build();
}

SparseState onehot_base_state(const std::vector<dist::Rational>& p) {
  check_pmf(p);
  const auto n = static_cast<int>(p.size());
  const auto bw = static_cast<std::size_t>(binary_width(n - 1));
  const double share = 1.0 / (n + 1);
  std::vector<SparseState::Entry> e;
  e.emplace_back(0, std::sqrt(n * share));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    const std::uint64_t idx = i | (std::uint64_t{1} << bw);
    e.emplace_back(idx, std::sqrt(dist::to_double(p[i]) * share));
  }
  return SparseState(bw + 1, std::move(e));
}

Circuit prepare_onehot_dist(BuildContext& ctx,
                            const std::vector<dist::Rational>& p) {
  check_pmf(p);
  const int n = static_cast<int>(p.size());
  if (n == 1) {
    CircuitBuilder b(ctx.fanout_budget());
    const Register x = b.add_register("x", 1);
    b.add(Gate::unitary(x[0], mat::pauli_x(), "x"));
    b.metadata().output_register = "x";
    return b.build();
  }
  LibraryOp base_op;
  {
    BuildContext::Scope s(ctx, "base");
    base_op = semantic_op("onehot_base",
                          std::make_shared<StatePrepMap>(onehot_base_state(p)),
                          onehot_base(ctx, p));
  }
  CircuitBuilder bb(ctx.fanout_budget());
  const Register bin =
      bb.add_register("bin", static_cast<std::size_t>(binary_width(n - 1)));
  const Register a = bb.add_register("a", 1);
  bb.add(base_op.on(concat({bin.qubits, a.qubits})));
  const dist::Rational alpha(1, n + 1);
  MarkedPreparation mp{bb.build(), {a[0]}, dist::to_double(alpha), alpha};

  CircuitBuilder b(parallel_amplify(ctx, mp, bin.qubits, "parallel"));
  const Register x = b.add_register("x", p.size());
  const std::vector<QubitId> rest(x.qubits.begin() + 1, x.qubits.end());
  b.add(one_hot_op(n - 1).on(concat({b.reg("out").qubits, rest})));
  b.add(Gate::nor_gate(rest, x[0]));
  b.metadata().output_register = "x";
  return b.build();
}

LibraryOp onehot_dist_op(BuildContext& ctx,
                         const std::vector<dist::Rational>& p) {
  const Circuit c = prepare_onehot_dist(ctx, p);
  // interface is x; move it first for the declared cost
  const auto map = std::make_shared<StatePrepMap>(onehot_dist_state(p));
  LibraryCost lc = declared_cost(c, p.size());
  return LibraryOp{"onehot_dist", map, lc};
}

std::vector<dist::Rational> exact_weights(const std::vector<double>& w) {
  std::vector<dist::Rational> out;
  dist::Rational sum = 0;
  for (double x : w) {
    if (!(x >= 0.0)) throw PreconditionError("negative or NaN weight");
    out.emplace_back(x);
    sum += out.back();
  }
  if (sum == 0) throw PreconditionError("all weights are zero");
  for (auto& x : out) x /= sum;
  return out;
}

Circuit prepare_small_state(BuildContext& ctx,
                            const std::vector<Complex>& amplitudes) {
  const std::size_t big_n = amplitudes.size();
  const std::size_t l = log2_exact(big_n);
  if (l == 0) throw PreconditionError("small state needs at least one qubit");
  double norm = 0.0;
  for (const auto& a : amplitudes) norm += std::norm(a);
  if (std::abs(norm - 1.0) > 1e-10) {
    throw PreconditionError("small state amplitudes are not unit norm");
  }
  // position v (1-based) holds value v, position N holds value 0
  std::vector<double> w(big_n);
  std::vector<double> phase(big_n, 0.0);
  for (std::size_t v = 0; v < big_n; ++v) {
    const std::size_t pos = v == 0 ? big_n - 1 : v - 1;
    w[pos] = std::norm(amplitudes[v]);
    if (std::abs(amplitudes[v]) > 1e-15) phase[pos] = std::arg(amplitudes[v]);
  }

  CircuitBuilder b(ctx.fanout_budget());
  const Register s = b.add_register("s", l);
  Circuit dist_c = [&] {
    BuildContext::Scope sc(ctx, "onehot");
    return prepare_onehot_dist(ctx, exact_weights(w));
  }();
  const auto img = b.embed(dist_c, {}, "oh_");
  const Register x = img.at("x");
  for (std::size_t pos = 0; pos < big_n; ++pos) {
    if (phase[pos] != 0.0) {
      b.add(Gate::unitary(x[pos], mat::phase(phase[pos]), "phase"));
    }
  }
  std::vector<QubitId> low(x.qubits.begin(), x.qubits.end() - 1);
  b.add(Gate::nor_gate(low, x[big_n - 1]));
  b.add(one_hot_op(static_cast<int>(big_n) - 1)
            .on(concat({s.qubits, low}))
            .inverse());
  b.metadata().output_register = "s";
  return b.build();
}

LibraryOp small_state_op(BuildContext& ctx,
                         const std::vector<Complex>& amplitudes) {
  const Circuit c = prepare_small_state(ctx, amplitudes);
  std::vector<Complex> amps = amplitudes;
  const auto state = SparseState::from_dense(log2_exact(amps.size()), amps);
  return LibraryOp{"small_state", std::make_shared<StatePrepMap>(state),
                   declared_cost(c, state.num_qubits())};
}

}  // namespace symprep::prim

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

#include "symprep/prim/hamming.hpp"

#include <memory>

#include "symprep/core/matrices.hpp"

namespace symprep::prim {

namespace {

// Copies of x for `rungs` readers: the original plus rungs - 1 fanned out.
struct Copies {
  std::vector<Gate> fanout;
  std::vector<std::vector<QubitId>> sources;
};

Copies make_copies(CircuitBuilder& b, const Register& x, int rungs) {
  Copies c;
  c.sources.push_back(x.qubits);
  if (rungs <= 1) return c;
  const auto n = x.size();
  const Register copies =
      b.add_register("copies", n * static_cast<std::size_t>(rungs - 1));
  for (int r = 1; r < rungs; ++r) {
    std::vector<QubitId> src;
    for (std::size_t q = 0; q < n; ++q) {
      src.push_back(copies[static_cast<std::size_t>(r - 1) * n + q]);
    }
    c.sources.push_back(src);
  }
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<QubitId> targets;
    for (int r = 1; r < rungs; ++r) {
      targets.push_back(c.sources[static_cast<std::size_t>(r)][q]);
    }
    c.fanout.push_back(Gate::fanout(x[q], targets));
  }
  return c;
}

}  // namespace

Circuit ham_gadget(BuildContext& ctx, int n, int k) {
  if (n < 1 || k < 1) throw PreconditionError("ham_gadget: need n, k >= 1");
  CircuitBuilder b(ctx.fanout_budget());
  const Register x = b.add_register("x", static_cast<std::size_t>(n));
  const Register out = b.add_register("out", static_cast<std::size_t>(k) + 1);
  const Copies c = make_copies(b, x, k + 1);
  b.add_all(c.fanout);
  for (int j = 1; j <= k; ++j) {
    b.add(exact_op(n, j).on(
        concat({c.sources[static_cast<std::size_t>(j - 1)],
                {out[static_cast<std::size_t>(j - 1)]}})));
  }
  b.add(threshold_op(n, k + 1).on(
      concat({c.sources[static_cast<std::size_t>(k)],
              {out[static_cast<std::size_t>(k)]}})));
  b.add_all(c.fanout);
  return b.build();
}

LibraryOp ham_op(BuildContext& ctx, int n, int k) {
  return semantic_op(
      "ham",
      std::make_shared<XorMap>(XorMap::Function::Ham,
                               static_cast<std::size_t>(n), k),
      ham_gadget(ctx, n, k));
}

Circuit custom_threshold(BuildContext& ctx, int n, int k, Ladder ladder) {
  if (n < 1 || k < 1) {
    throw PreconditionError("custom_threshold: need n, k >= 1");
  }
  CircuitBuilder b(ctx.fanout_budget());
  const Register sel = b.add_register("sel", static_cast<std::size_t>(k));
  const Register x = b.add_register("x", static_cast<std::size_t>(n));
  const Register out = b.add_register("out", 1);
  const Copies c = make_copies(b, x, k);
  const Register y = b.add_register("y", static_cast<std::size_t>(k));
  const Register z = b.add_register("z", static_cast<std::size_t>(k));

  std::vector<Gate> rungs;
  for (int i = 1; i <= k; ++i) {
    const auto& src = c.sources[static_cast<std::size_t>(i - 1)];
    const QubitId yi = y[static_cast<std::size_t>(i - 1)];
    if (ladder == Ladder::Le) {
      // [|x| <= i] = not [|x| >= i+1]
      rungs.push_back(threshold_op(n, i + 1).on(concat({src, {yi}})));
      rungs.push_back(Gate::unitary(yi, mat::pauli_x(), "x"));
    } else {
      rungs.push_back(exact_op(n, i).on(concat({src, {yi}})));
    }
  }
  std::vector<Gate> ands;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    ands.push_back(Gate::and_gate({y[i], sel[i]}, z[i]));
  }

  b.add_all(c.fanout);
  b.add_all(rungs);
  b.add_all(ands);
  b.add(Gate::or_gate(z.qubits, out[0]));
  b.add_all(ands);
  for (auto it = rungs.rbegin(); it != rungs.rend(); ++it) b.add(it->inverse());
  b.add_all(c.fanout);
  return b.build();
}

LibraryOp custom_threshold_op(BuildContext& ctx, int n, int k, Ladder ladder) {
  const auto f = ladder == Ladder::Le ? XorMap::Function::LadderLe
                                      : XorMap::Function::LadderEq;
  return semantic_op(
      ladder == Ladder::Le ? "ladder_le" : "ladder_eq",
      std::make_shared<XorMap>(f, static_cast<std::size_t>(k + n), k),
      custom_threshold(ctx, n, k, ladder));
}

}  // namespace symprep::prim

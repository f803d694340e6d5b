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

#include <gtest/gtest.h>

#include <cmath>

#include "symprep/synth/dicke.hpp"
#include "test_support.hpp"

namespace symprep::synth {
namespace {

using prim::BuildContext;

void expect_exact(const SynthesisOutput& out) {
  const auto r = verify(out);
  EXPECT_GE(r.fidelity, 1.0 - 1e-9);
  EXPECT_TRUE(r.clean) << r.residual_ancilla_mass;
  const auto s = testing::output_on(out.circuit, out.data);
  const std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  EXPECT_LT(weight_class_spread(amps), 1e-9);
}

TEST(SymmetricTarget, OneAndTwoHalf) {
  const double h = std::sqrt(0.5);
  const auto d = symmetric_target(4, {0.0, h, h}).to_dense();
  EXPECT_NEAR(d[0b0001].real(), h * 0.5, 1e-12);
  EXPECT_NEAR(d[0b0011].real(), h / std::sqrt(6.0), 1e-12);
  EXPECT_NEAR(std::abs(d[0b0111]), 0.0, 1e-15);
  EXPECT_THROW(symmetric_target(4, {0.5, 0.5}), DomainError);
}

TEST(Symmetric, WeightsOneAndTwo) {
  BuildContext ctx;
  const double h = std::sqrt(0.5);
  expect_exact(build_symmetric(ctx, 4, {0.0, h, h}));
}

TEST(Symmetric, ZeroAndOneWithPhase) {
  BuildContext ctx;
  expect_exact(build_symmetric(
      ctx, 4, {std::sqrt(0.3), std::polar(std::sqrt(0.7), 0.9)}));
}

TEST(Symmetric, ThreeWeightsWithPhase) {
  BuildContext ctx;
  expect_exact(build_symmetric(
      ctx, 4, {0.5, Complex(0.0, 0.5), std::polar(std::sqrt(0.5), -2.0)}));
}

TEST(Symmetric, AllZeroWeightIsZeroState) {
  BuildContext ctx;
  const SynthesisOutput out = build_symmetric(ctx, 4, {1.0, 0.0, 0.0});
  EXPECT_EQ(out.report.layers, 0);
  EXPECT_NEAR(verify(out).fidelity, 1.0, 1e-12);
}

TEST(Symmetric, SingleWeightMatchesDicke) {
  BuildContext c1;
  BuildContext c2;
  const SynthesisOutput sym = build_symmetric(c1, 4, {0.0, 0.0, 1.0});
  const SynthesisOutput dk = build_dicke(c2, 4, 2);
  const auto a = testing::output_on(sym.circuit, sym.data);
  const auto b = testing::output_on(dk.circuit, dk.data);
  const auto b_on_a = sim::StateVector(a.qubit_order(),
                                       {b.amplitudes().begin(), b.amplitudes().end()});
  EXPECT_NEAR(sim::fidelity(a, b_on_a), 1.0, 1e-9);
}

TEST(Symmetric, PaddedPath) {
  BuildContext ctx;
  expect_exact(build_symmetric(ctx, 3, {0.6, 0.0, 0.8}, 2));
}

TEST(Symmetric, RejectsUnnormalized) {
  BuildContext ctx;
  EXPECT_THROW(build_symmetric(ctx, 4, {0.5, 0.5}), DomainError);
}

TEST(Synthesize, DispatchesOnEta) {
  SynthesisRequest req;
  req.n = 4;
  req.k = 1;
  req.ell = 2;
  const auto out = synthesize(req);
  EXPECT_NEAR(verify(out).fidelity, 1.0, 1e-9);
  EXPECT_EQ(out.circuit.fanout_budget(), 1);
}

}  // namespace
}  // namespace symprep::synth

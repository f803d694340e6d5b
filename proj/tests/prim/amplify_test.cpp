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

#include "symprep/prim/amplify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "symprep/core/matrices.hpp"
#include "symprep/core/cost.hpp"
#include "test_support.hpp"

namespace symprep::prim {
namespace {

// sqrt(alpha)|+>|1> + sqrt(1-alpha)|0>|0> on (data, flag)
MarkedPreparation toy(double alpha) {
  CircuitBuilder b(2);
  const Register data = b.add_register("data", 1);
  const Register flag = b.add_register("flag", 1);
  b.add(Gate::unitary(flag[0], mat::rot(1.0 - alpha), "rot"));
  b.add(Gate::controlled_hermitian({flag[0]}, data[0], mat::hadamard(), "h"));
  return MarkedPreparation{b.build(), {flag[0]}, alpha, std::nullopt};
}

SparseState plus_one() {
  const double h = std::sqrt(0.5);
  return SparseState(2, {{2, h}, {3, h}});
}

TEST(OddPeriod, PicksLargestAngleBelow) {
  EXPECT_EQ(odd_period(1.0), 1);
  EXPECT_EQ(odd_period(0.25), 3);
  EXPECT_EQ(odd_period(0.4), 3);
  EXPECT_EQ(odd_period(0.2), 5);
  EXPECT_THROW(odd_period(0.0), PreconditionError);
}

TEST(ExactGrover, QuarterNeedsOneRound) {
  BuildContext ctx;
  const auto mp = toy(0.25);
  const Circuit c = exact_grover(ctx, mp);
  const auto out = sim::run_from_zero(c);
  EXPECT_NEAR(testing::overlap(out, plus_one()), 1.0, 1e-12);
  ASSERT_EQ(c.metadata().amplifications.size(), 1u);
  EXPECT_EQ(c.metadata().amplifications[0].rounds, 1);
}

TEST(ExactGrover, SinSquaredPiOverTen) {
  BuildContext ctx;
  const double a = std::pow(std::sin(std::numbers::pi / 10), 2);
  const Circuit c = exact_grover(ctx, toy(a));
  EXPECT_NEAR(testing::overlap(sim::run_from_zero(c), plus_one()), 1.0, 1e-12);
  EXPECT_EQ(c.metadata().amplifications[0].rounds, 2);
}

TEST(ExactGrover, AlphaOneIsPassthrough) {
  BuildContext ctx;
  const auto mp = toy(1.0);
  const Circuit c = exact_grover(ctx, mp);
  EXPECT_EQ(c.gate_count(), mp.circuit.gate_count());
}

TEST(ExactGrover, RejectsInexactAlpha) {
  BuildContext ctx;
  EXPECT_THROW(exact_grover(ctx, toy(0.5)), PreconditionError);
}

TEST(ExactGrover, RejectsWrongDeclaredMass) {
  BuildContext ctx;
  auto mp = toy(0.25);
  mp.alpha = std::pow(std::sin(std::numbers::pi / 10), 2);
  EXPECT_THROW(exact_grover(ctx, mp), PreconditionError);
}

class AmplifyTest : public ::testing::TestWithParam<double> {};

TEST_P(AmplifyTest, CleanAndExact) {
  BuildContext ctx;
  const auto mp = toy(GetParam());
  const Circuit c = amplify_to_exact(ctx, mp);
  const auto data = mp.circuit.reg("data").qubits;
  const auto r = sim::check_clean_preparation(
      c, data, SparseState(1, {{0, std::sqrt(0.5)}, {1, std::sqrt(0.5)}}));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

INSTANTIATE_TEST_SUITE_P(Alphas, AmplifyTest,
                         ::testing::Values(0.4, 1.0, 0.25, 0.7, 0.05, 1e-3));

TEST(Amplify, PointFourUsesOneRound) {
  BuildContext ctx;
  const Circuit c = amplify_to_exact(ctx, toy(0.4), "site");
  const auto rep = cost(c);
  ASSERT_EQ(rep.amplifications.size(), 1u);
  EXPECT_EQ(rep.amplifications[0].label, "site");
  EXPECT_EQ(rep.amplifications[0].rounds, 1);
  EXPECT_EQ(rep.grover_rounds, 1);
}

TEST(Amplify, ForcedRoundsKeepStructure) {
  BuildOptions opt;
  opt.round_override["outer/amplify"] = 4;
  BuildContext ctx(opt);
  BuildContext::Scope s(ctx, "outer");
  const Circuit c = amplify_to_exact(ctx, toy(0.4));
  const auto rep = cost(c);
  EXPECT_EQ(rep.grover_rounds, 4);
  EXPECT_TRUE(rep.amplifications[0].forced);
  // forced to a smaller angle the result is still exact
  const auto r = sim::check_clean_preparation(
      c, toy(0.4).circuit.reg("data").qubits,
      SparseState(1, {{0, std::sqrt(0.5)}, {1, std::sqrt(0.5)}}));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
}

TEST(Amplify, ZeroAlphaIsRejected) {
  BuildContext ctx;
  EXPECT_THROW(amplify_to_exact(ctx, toy(0.0)), PreconditionError);
}

}  // namespace
}  // namespace symprep::prim

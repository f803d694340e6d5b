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

#include <gtest/gtest.h>

#include <cmath>

#include "symprep/sim/certify.hpp"
#include "test_support.hpp"

namespace symprep::prim {
namespace {

using dist::Rational;

sim::VerificationResult check_dist(const std::vector<Rational>& p) {
  BuildContext ctx;
  const Circuit c = prepare_onehot_dist(ctx, p);
  return sim::check_clean_preparation(c, c.reg("x").qubits,
                                      onehot_dist_state(p));
}

TEST(ZeroW, ThreeQubits) {
  BuildContext ctx;
  const Circuit c = build_zero_w(ctx, 3);
  const auto s = sim::run_from_zero(c);
  EXPECT_NEAR(s.amplitude(0).real(), std::sqrt(0.5), 1e-12);
  for (std::uint64_t i : {1u, 2u, 4u}) {
    EXPECT_NEAR(s.amplitude(i).real(), 1.0 / std::sqrt(6.0), 1e-12);
  }
}

TEST(OnehotBase, MatchesAnalyticState) {
  BuildContext ctx;
  const std::vector<Rational> p = {Rational(1, 2), Rational(1, 3),
                                   Rational(1, 6)};
  const Circuit c = onehot_base(ctx, p);
  const auto r = sim::check_clean_preparation(
      c, qubits_of(c, {"bin", "a"}), onehot_base_state(p));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

TEST(OnehotBase, TwoPositionsFirstHeavy) {
  BuildContext ctx;
  const std::vector<Rational> p = {Rational(3, 4), Rational(1, 4)};
  const Circuit c = onehot_base(ctx, p);
  const auto r = sim::check_clean_preparation(
      c, qubits_of(c, {"bin", "a"}), onehot_base_state(p));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

TEST(OnehotDist, Uniform4) {
  const std::vector<Rational> p(4, Rational(1, 4));
  const auto r = check_dist(p);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

TEST(OnehotDist, PointMass) {
  const auto r = check_dist({Rational(1), Rational(0), Rational(0)});
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

TEST(OnehotDist, HalfThirdSixth) {
  const auto r = check_dist({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

TEST(OnehotDist, SinglePosition) {
  const auto r = check_dist({Rational(1)});
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
}

TEST(OnehotDist, RejectsUnnormalized) {
  BuildContext ctx;
  EXPECT_THROW(prepare_onehot_dist(ctx, {Rational(1, 2), Rational(1, 3)}),
               PreconditionError);
}

TEST(OnehotDist, SemanticOpCertifies) {
  BuildContext ctx;
  const std::vector<Rational> p = {Rational(1, 5), Rational(4, 5)};
  const Circuit c = prepare_onehot_dist(ctx, p);
  const LibraryOp op = onehot_dist_op(ctx, p);
  const auto res = sim::certify_library_gate(
      c, op.on(c.reg("x").qubits), {{"zero", SparseState::basis(2, 0)}});
  EXPECT_TRUE(res.passed) << res.failure;
  EXPECT_GT(op.cost.ancillas, 0);
}

sim::VerificationResult check_small(const std::vector<Complex>& amps) {
  BuildContext ctx;
  const Circuit c = prepare_small_state(ctx, amps);
  std::size_t l = 0;
  while ((std::size_t{1} << l) < amps.size()) ++l;
  return sim::check_clean_preparation(c, c.reg("s").qubits,
                                      SparseState::from_dense(l, amps));
}

TEST(SmallState, Plus) {
  const double h = std::sqrt(0.5);
  const auto r = check_small({h, h});
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

TEST(SmallState, ComplexBell) {
  const double h = std::sqrt(0.5);
  const auto r = check_small({h, 0.0, 0.0, Complex(0.0, h)});
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

TEST(SmallState, BasisState) {
  const auto r = check_small({0.0, 0.0, 1.0, 0.0});
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
}

TEST(SmallState, ZeroVectorRejected) {
  BuildContext ctx;
  EXPECT_THROW(prepare_small_state(ctx, {0.0, 0.0}), PreconditionError);
}

}  // namespace
}  // namespace symprep::prim

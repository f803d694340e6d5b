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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "symprep/core/library.hpp"
#include "symprep/core/matrices.hpp"
#include "symprep/prim/parallel.hpp"
#include "test_support.hpp"

namespace symprep::prim {
namespace {

using dist::Rational;

// sum_i sqrt(alpha_i)|e_i>_x |phi_i>_d with phi_i a fixed one-qubit state
BranchPreparation branches(const std::vector<Rational>& alpha) {
  const auto n = alpha.size();
  std::vector<SparseState::Entry> e;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::sqrt(dist::to_double(alpha[i]));
    // data qubit sits above the one-hot block; odd branches carry |1>
    const std::uint64_t data = (i % 2) ? (std::uint64_t{1} << n) : 0;
    e.emplace_back((std::uint64_t{1} << i) | data, a);
  }
  CircuitBuilder b(2);
  const Register x = b.add_register("x", n);
  const Register d = b.add_register("d", 1);
  b.add(oracle_prep_op("branches", SparseState(n + 1, e))
            .on(concat({x.qubits, d.qubits})));
  return BranchPreparation{b.build(), x.qubits, alpha};
}

sim::StateVector expected(const BranchPreparation& bp,
                          const std::vector<Rational>& beta) {
  std::vector<double> b;
  for (const auto& x : beta) b.push_back(dist::to_double(x));
  const auto in = sim::run_from_zero(bp.circuit);
  return reweighted(in, bp.onehot, b);
}

double run_fidelity(const BranchPreparation& bp,
                    const std::vector<Rational>& beta) {
  BuildContext ctx;
  const Circuit c = adjust_amplitudes(ctx, bp, beta);
  const auto got = sim::run_from_zero(c).restricted(bp.circuit.qubits());
  return sim::fidelity(expected(bp, beta), got);
}

TEST(Adjust, HalfHalfToEightyTwenty) {
  const auto bp = branches({Rational(1, 2), Rational(1, 2)});
  BuildContext ctx;
  const Circuit c = adjust_amplitudes(ctx, bp, {Rational(1), Rational(1, 4)});
  const auto got = sim::run_from_zero(c).restricted(bp.circuit.qubits());
  // (sqrt .8, sqrt .2) on (e1, e2), Z = 5/8
  const double p1 = std::norm(got.amplitude(0b001));
  const double p2 = std::norm(got.amplitude(0b110));
  EXPECT_NEAR(p1, 0.8, 1e-10);
  EXPECT_NEAR(p2, 0.2, 1e-10);
}

TEST(Adjust, AllOnesIsIdentity) {
  const auto bp = branches({Rational(1, 3), Rational(1, 6), Rational(1, 2)});
  EXPECT_NEAR(run_fidelity(bp, {Rational(1), Rational(1), Rational(1)}), 1.0,
              1e-10);
}

TEST(Adjust, SingleBetaCollapses) {
  const auto bp = branches({Rational(1, 3), Rational(1, 6), Rational(1, 2)});
  BuildContext ctx;
  const Circuit c =
      adjust_amplitudes(ctx, bp, {Rational(0), Rational(1), Rational(0)});
  const auto got = sim::run_from_zero(c).restricted(bp.circuit.qubits());
  EXPECT_NEAR(std::norm(got.amplitude(0b1010)), 1.0, 1e-10);
}

TEST(Adjust, RandomDraws) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 12);
  for (int draw = 0; draw < 5; ++draw) {
    const std::size_t n = 2 + static_cast<std::size_t>(draw % 3);
    std::vector<Rational> alpha;
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      alpha.emplace_back(num(rng));
      sum += alpha.back();
    }
    for (auto& a : alpha) a /= sum;
    std::vector<Rational> beta;
    for (std::size_t i = 0; i < n; ++i) beta.emplace_back(num(rng), 12);
    EXPECT_NEAR(run_fidelity(branches(alpha), beta), 1.0, 1e-9) << draw;
  }
}

TEST(Adjust, RejectsBadInput) {
  const auto bp = branches({Rational(1, 2), Rational(1, 2)});
  BuildContext ctx;
  EXPECT_THROW(adjust_amplitudes(ctx, bp, {Rational(0), Rational(0)}),
               PreconditionError);
  EXPECT_THROW(adjust_amplitudes(ctx, bp, {Rational(2), Rational(0)}),
               PreconditionError);
  auto wrong = bp;
  wrong.alpha = {Rational(1, 4), Rational(3, 4)};
  EXPECT_THROW(adjust_amplitudes(ctx, wrong, {Rational(1), Rational(1)}),
               PreconditionError);
}

// sqrt(alpha)|1>_d|1>_f + sqrt(1-alpha)|0>|0>
MarkedPreparation zero_or_one(const Rational& alpha) {
  CircuitBuilder b(2);
  const Register d = b.add_register("d", 1);
  const Register f = b.add_register("f", 1);
  b.add(Gate::unitary(f[0], mat::rot(1.0 - dist::to_double(alpha)), "rot"));
  b.add(Gate::cnot(f[0], d[0]));
  return MarkedPreparation{b.build(), {f[0]}, dist::to_double(alpha), alpha};
}

TEST(Parallel, CopiesAndHitMass) {
  EXPECT_EQ(parallel_copies(Rational(1, 2)), 2);
  EXPECT_EQ(parallel_copies(Rational(1, 3)), 3);
  EXPECT_EQ(parallel_copies(Rational(2, 5)), 3);
  EXPECT_EQ(parallel_copies(Rational(1)), 1);
}

class ParallelTest : public ::testing::TestWithParam<int> {};

TEST_P(ParallelTest, GathersTheHit) {
  const Rational alpha(1, GetParam());
  BuildContext ctx;
  const auto base = zero_or_one(alpha);
  const Circuit c =
      parallel_amplify(ctx, base, base.circuit.reg("d").qubits);
  const auto r = sim::check_clean_preparation(c, c.reg("out").qubits,
                                              SparseState::basis(1, 1));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
  // p* = t alpha (1 - alpha)^(t-1)
  const auto& rec = c.metadata().amplifications.back();
  const int t = GetParam();
  const Rational p = alpha * t * dist::pow(1 - alpha, t - 1);
  EXPECT_EQ(*rec.alpha_exact, dist::to_string(p));
}

INSTANTIATE_TEST_SUITE_P(Alphas, ParallelTest, ::testing::Values(1, 2, 3));

TEST(Parallel, RejectsDirtyUnmarkedBranch) {
  CircuitBuilder b(2);
  const Register d = b.add_register("d", 1);
  const Register f = b.add_register("f", 1);
  b.add(Gate::unitary(f[0], mat::rot(0.5), "rot"));
  b.add(Gate::unitary(d[0], mat::hadamard(), "h"));
  MarkedPreparation mp{b.build(), {f[0]}, 0.5, Rational(1, 2)};
  BuildContext ctx;
  EXPECT_THROW(parallel_amplify(ctx, mp, d.qubits), PreconditionError);
}

}  // namespace
}  // namespace symprep::prim

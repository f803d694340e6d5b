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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "symprep/dist/damped_binomial.hpp"
#include "symprep/sim/certify.hpp"
#include "test_support.hpp"

namespace symprep::synth {
namespace {

using prim::BuildContext;

TEST(DampedState, TwoTwoAmplitudes) {
  const SparseState s = damped_state(2, 2);
  const auto d = s.to_dense();
  EXPECT_NEAR(std::abs(d[0]), 0.0, 1e-15);
  EXPECT_NEAR(d[1].real(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(d[2].real(), 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(d[3].real(), 1.0 / 3.0, 1e-12);
}

TEST(ZeroDamped, TwoTwoMatchesHandComputation) {
  // alpha_0 = 1/4, so gamma = 1/(1 + 4 alpha_0) = 1/2
  BuildContext ctx;
  const Circuit c = prepare_zero_damped(ctx, 2, 2);
  const auto out = testing::output_on(c, c.reg("x").qubits);
  // up to a global phase
  const Complex g = std::polar(1.0, -std::arg(out.amplitude(0)));
  EXPECT_NEAR((g * out.amplitude(0)).real(), std::sqrt(0.5), 1e-9);
  EXPECT_NEAR(std::abs(g * out.amplitude(1) - std::sqrt(2.0 / 9.0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(g * out.amplitude(2) - std::sqrt(2.0 / 9.0)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(g * out.amplitude(3) - std::sqrt(1.0 / 18.0)), 0.0, 1e-9);
}

class ZeroDampedGrid : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(ZeroDampedGrid, CleanAndExact) {
  const auto [m, k] = GetParam();
  BuildContext ctx(testing::budget(std::max(2, k)));
  const Circuit c = prepare_zero_damped(ctx, m, k);
  const auto r = sim::check_clean_preparation(c, c.reg("x").qubits,
                                              zero_damped_state(m, k));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean) << r.residual_ancilla_mass;
  const double gamma = dist::to_double(dist::zero_shift(m, k).gamma);
  const auto out = testing::output_on(c, c.reg("x").qubits);
  EXPECT_NEAR(std::norm(out.amplitude(0)), 1.0 - gamma, 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Small, ZeroDampedGrid,
                         ::testing::Values(std::pair{2, 1}, std::pair{3, 1},
                                           std::pair{2, 2}, std::pair{3, 2},
                                           std::pair{4, 2}, std::pair{3, 3}));

TEST(ZeroDamped, DomainErrors) {
  BuildContext ctx;
  EXPECT_THROW(prepare_zero_damped(ctx, 2, 3), DomainError);
  EXPECT_THROW(prepare_zero_damped(ctx, 2, 0), DomainError);
}

std::vector<sim::CertificationCase> control_cases(int m) {
  const auto w = static_cast<std::size_t>(m) + 1;
  const double h = std::sqrt(0.5);
  return {{"ctl=0", SparseState::basis(w, 0)},
          {"ctl=1", SparseState::basis(w, 1)},
          {"ctl=+", SparseState(w, {{0, h}, {1, h}})}};
}

class CtrlDampedGrid : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(CtrlDampedGrid, MatchesSemanticMap) {
  const auto [m, k] = GetParam();
  BuildContext ctx(testing::budget(std::max(2, k)));
  const Circuit c = ctrl_damped(ctx, m, k);
  const LibraryOp op = ctrl_damped_op(ctx, m, k);
  const auto iface = prim::qubits_of(c, {"ctl", "x"});
  const auto res =
      sim::certify_library_gate(c, op.on(iface), control_cases(m));
  EXPECT_TRUE(res.passed) << res.failure << " " << res.min_fidelity;
}

INSTANTIATE_TEST_SUITE_P(Small, CtrlDampedGrid,
                         ::testing::Values(std::pair{1, 1}, std::pair{2, 1},
                                           std::pair{2, 2}, std::pair{3, 2},
                                           std::pair{4, 3}));

TEST(CtrlDamped, ControlOneGivesDampedState) {
  BuildContext ctx;
  const Circuit c = ctrl_damped(ctx, 2, 2);
  const auto iface = prim::qubits_of(c, {"ctl", "x"});
  auto rest = c.qubits();
  std::erase_if(rest, [&](QubitId q) {
    return std::find(iface.begin(), iface.end(), q) != iface.end();
  });
  const auto in =
      sim::StateVector::from_sparse(iface, SparseState::basis(3, 1)).padded(rest);
  const auto out = sim::run(c, in).restricted(iface);
  // x occupies bits 1 and 2 of the interface index
  EXPECT_NEAR(std::norm(out.amplitude(1 | (1 << 1))), 4.0 / 9.0, 1e-9);
  EXPECT_NEAR(std::norm(out.amplitude(1 | (2 << 1))), 4.0 / 9.0, 1e-9);
  EXPECT_NEAR(std::norm(out.amplitude(1 | (3 << 1))), 1.0 / 9.0, 1e-9);
}

}  // namespace
}  // namespace symprep::synth

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

#include <gtest/gtest.h>

#include <cmath>
#include <tuple>

#include "symprep/core/library.hpp"
#include "symprep/dist/occupancy.hpp"
#include "test_support.hpp"

namespace symprep::synth {
namespace {

using prim::BuildContext;

TEST(BucketPlan, DefaultsAndPadding) {
  auto p = plan_buckets(4, 2);
  EXPECT_EQ(p.ell, 2);
  EXPECT_EQ(p.n_prime, 4);
  p = plan_buckets(8, 2);
  EXPECT_EQ(p.ell, 4);
  EXPECT_EQ(p.m, 2);
  p = plan_buckets(16, 2);
  EXPECT_EQ(p.ell, 8);
  p = plan_buckets(5, 1, 2);
  EXPECT_EQ(p.n_prime, 6);
  p = plan_buckets(7, 2, 4);
  EXPECT_EQ(p.n_prime, 8);
  EXPECT_EQ(p.m, 2);
  // no divisor works, pad with ell = k
  p = plan_buckets(5, 2);
  EXPECT_EQ(p.ell, 2);
  EXPECT_EQ(p.n_prime, 6);
  EXPECT_THROW(plan_buckets(4, 2, 4), DomainError);
  EXPECT_THROW(plan_buckets(4, 5), DomainError);
}

TEST(OccupancyTarget, MarginalIsOccupancyPmf) {
  for (auto [n, k, ell] : {std::tuple{4, 2, 2}, std::tuple{6, 2, 3},
                           std::tuple{8, 2, 4}, std::tuple{6, 3, 3}}) {
    const SparseState s = occupancy_target(n, k, ell);
    const auto p = dist::occupancy_pmf(n, k, ell);
    std::vector<double> marg(static_cast<std::size_t>(k) + 1, 0.0);
    for (const auto& [x, a] : s.entries()) {
      const auto onehot = x >> n;
      marg[static_cast<std::size_t>(std::bit_width(onehot))] += std::norm(a);
    }
    for (std::size_t j = 0; j < marg.size(); ++j) {
      EXPECT_NEAR(marg[j], dist::to_double(p[j]), 1e-12) << n << k << ell;
    }
  }
}

class OccupancyGrid
    : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(OccupancyGrid, CleanAndExact) {
  const auto [n, k, ell] = GetParam();
  BuildContext ctx;
  const SynthesisOutput out = build_occupancy_state(ctx, n, k, ell);
  const auto r = verify(out);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean) << r.residual_ancilla_mass;
}

INSTANTIATE_TEST_SUITE_P(Small, OccupancyGrid,
                         ::testing::Values(std::tuple{4, 1, 4},
                                           std::tuple{4, 2, 2},
                                           std::tuple{6, 2, 3}));

TEST(Occupancy, SingleBucketOccupancyIsW) {
  BuildContext ctx;
  const SynthesisOutput out = build_occupancy_state(ctx, 4, 1, 4);
  const auto s = testing::output_on(out.circuit, out.data);
  // A = e_1 is bit 4
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::norm(s.amplitude((1u << i) | 16u)), 0.25, 1e-9);
  }
}

TEST(Occupancy, RejectsBadSplit) {
  BuildContext ctx;
  EXPECT_THROW(build_occupancy_state(ctx, 5, 1, 2), DomainError);
  EXPECT_THROW(build_occupancy_state(ctx, 4, 2, 4), DomainError);
}

class DickeGrid
    : public ::testing::TestWithParam<std::tuple<int, int, int>> {};

TEST_P(DickeGrid, CleanExactUniform) {
  const auto [n, k, ell] = GetParam();
  BuildContext ctx;
  const SynthesisOutput out = build_dicke(ctx, n, k, ell);
  const auto r = verify(out);
  EXPECT_GE(r.fidelity, 1.0 - 1e-9);
  EXPECT_TRUE(r.clean) << r.residual_ancilla_mass;
  const auto s = testing::output_on(out.circuit, out.data);
  const std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  EXPECT_LT(weight_class_spread(amps), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(
    Grid, DickeGrid,
    ::testing::Values(std::tuple{4, 1, 2}, std::tuple{4, 1, 4},
                      std::tuple{4, 2, 2}, std::tuple{6, 2, 3},
                      std::tuple{6, 1, 3}, std::tuple{8, 1, 4},
                      std::tuple{8, 2, 4}, std::tuple{5, 1, 2},
                      std::tuple{7, 2, 4}));

TEST(Dicke, FourTwoAmplitudes) {
  BuildContext ctx;
  const SynthesisOutput out = build_dicke(ctx, 4, 2);
  const auto s = testing::output_on(out.circuit, out.data);
  for (std::uint64_t x = 0; x < 16; ++x) {
    const double want = std::popcount(x) == 2 ? 1.0 / 6.0 : 0.0;
    EXPECT_NEAR(std::norm(s.amplitude(x)), want, 1e-9) << x;
  }
}

TEST(Dicke, WeightZeroIsEmpty) {
  BuildContext ctx;
  const SynthesisOutput out = build_dicke(ctx, 3, 0);
  EXPECT_EQ(out.report.layers, 0);
  EXPECT_NEAR(verify(out).fidelity, 1.0, 1e-12);
}

TEST(Dicke, FlippedWeight) {
  BuildContext ctx;
  const SynthesisOutput out = build_dicke_flipped(ctx, 4, 1);
  const auto r = verify(out);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-9);
  EXPECT_TRUE(r.clean);
}

TEST(Dicke, RejectsWeightAboveN) {
  BuildContext ctx;
  EXPECT_THROW(build_dicke(ctx, 3, 4), DomainError);
}

TEST(Dicke, PaddedRecordsExactTailProbability) {
  BuildContext ctx;
  const SynthesisOutput out = build_dicke(ctx, 5, 1, 2);
  bool found = false;
  for (const auto& a : out.report.amplifications) {
    if (a.label == "dicke/pad") {
      found = true;
      EXPECT_EQ(a.alpha_exact, "5/6");
    }
  }
  EXPECT_TRUE(found);
}

TEST(Dicke, FanoutWidthIndependentOfN) {
  // cost only, nothing is simulated at these sizes
  int width = -1;
  for (int n : {8, 16, 24}) {
    BuildContext ctx;
    const SynthesisOutput out = build_dicke(ctx, n, 2, 4);
    if (width < 0) width = out.report.max_fanout_width;
    EXPECT_EQ(out.report.max_fanout_width, width) << n;
  }
}

}  // namespace
}  // namespace symprep::synth

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

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "symprep/harness/acceptance.hpp"
#include "symprep/harness/catalog.hpp"
#include "symprep/harness/claims.hpp"
#include "symprep/harness/grid.hpp"

namespace symprep::harness {
namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.grid = parse_grid("m=1..10,k=1..3,slice=10,enumerate=10");
  return cfg;
}

TEST(Grid, ParsesRanges) {
  const GridSpec g = parse_grid("m=2..8,k=3,slice=12");
  EXPECT_EQ(g.m.lo, 2);
  EXPECT_EQ(g.m.hi, 8);
  EXPECT_EQ(g.k.lo, 3);
  EXPECT_EQ(g.k.hi, 3);
  EXPECT_EQ(g.slice_max, 12);
  EXPECT_EQ(g.enumerate_max, 20);
}

TEST(Grid, RejectsBadSpecs) {
  EXPECT_THROW(parse_grid("m=x..3"), ConfigError);
  EXPECT_THROW(parse_grid("q=1..3"), ConfigError);
  EXPECT_THROW(parse_grid("m"), ConfigError);
}

TEST(Grid, EmptyGridIsConfigError) {
  SweepConfig cfg;
  cfg.grid = parse_grid("m=5..4");
  EXPECT_THROW(run_claims(cfg), ConfigError);
  cfg.grid = parse_grid("m=1..3,k=4..6");
  EXPECT_THROW(run_claims(cfg), ConfigError);
  cfg = small_config();
  cfg.tol = 0.0;
  EXPECT_THROW(run_claims(cfg), ConfigError);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(ParallelFor, RethrowsFirstError) {
  EXPECT_THROW(parallel_for(50, 3,
                            [](std::size_t i) {
                              if (i == 17) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(Claims, SmallGridPasses) {
  const auto v = run_claims(small_config());
  EXPECT_FALSE(v.empty());
  EXPECT_TRUE(all_pass(v));
  std::set<std::string> ids;
  for (const auto& x : v) ids.insert(x.id);
  EXPECT_EQ(ids.size(), claim_catalog().size());
}

TEST(Claims, LambdaFaultFailsEverywhere) {
  auto cfg = small_config();
  cfg.claims = {"lambda-bounds"};
  cfg.fault = Fault::LambdaOffByOne;
  const auto v = run_claims(cfg);
  ASSERT_FALSE(v.empty());
  for (const auto& x : v) EXPECT_FALSE(x.pass) << x.params;
}

TEST(Claims, UnknownIdIsConfigError) {
  auto cfg = small_config();
  cfg.claims = {"no-such-claim"};
  EXPECT_THROW(run_claims(cfg), ConfigError);
}

TEST(Claims, OrderIndependentOfWorkers) {
  auto cfg = small_config();
  const auto one = claims_json(run_claims(cfg), false).dump();
  cfg.workers = 3;
  const auto three = claims_json(run_claims(cfg), false).dump();
  EXPECT_EQ(one, three);
  EXPECT_EQ(one.find("seconds"), std::string::npos);
}

TEST(Claims, LambdaRowForTwoTwo) {
  auto cfg = small_config();
  cfg.claims = {"lambda-bounds"};
  for (const auto& v : run_claims(cfg)) {
    if (v.params == "m=2 k=2") {
      EXPECT_EQ(v.lhs, "16/9");
      EXPECT_EQ(v.rhs, "[4/3, 2]");
      return;
    }
  }
  FAIL() << "row m=2 k=2 missing";
}

TEST(Claims, WritesReports) {
  const auto dir = std::filesystem::temp_directory_path() / "symprep_claims_test";
  std::filesystem::remove_all(dir);
  auto cfg = small_config();
  cfg.claims = {"hit-prob-lower-bound"};
  write_claims(dir, run_claims(cfg));
  for (const char* f : {"claims.txt", "claims.json", "claims_timing.json"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / f)) << f;
  }
  std::ifstream in(dir / "claims.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("hit-prob-lower-bound"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Claims, WriteFailureNamesPath) {
  try {
    write_claims("/proc/symprep_no_such_dir", {});
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/proc/symprep_no_such_dir"),
              std::string::npos);
  }
}

TEST(Catalog, ParseRational) {
  EXPECT_EQ(parse_rational("3/6"), dist::Rational(1, 2));
  EXPECT_EQ(parse_rational("7"), dist::Rational(7));
  EXPECT_THROW(parse_rational("1/0"), ConfigError);
  EXPECT_THROW(parse_rational("x"), ConfigError);
}

TEST(Catalog, HamGadgetCertifies) {
  const auto c = check_primitive("ham_gadget", {{"n", "3"}, {"k", "1"}});
  EXPECT_TRUE(c.passed) << c.failure;
  EXPECT_EQ(c.cases, 33u);
  ASSERT_TRUE(c.circuit.has_value());
  EXPECT_EQ(c.qubits, c.circuit->num_qubits());
}

TEST(Catalog, BadRequests) {
  EXPECT_THROW(check_primitive("teleport", {}), ConfigError);
  EXPECT_THROW(check_primitive("ham_gadget", {{"n", "3"}}), ConfigError);
  EXPECT_THROW(check_primitive("ham_gadget", {{"n", "3"}, {"k", "one"}}),
               ConfigError);
}

TEST(Catalog, BuildErrorsAreFailedChecks) {
  const auto c = check_primitive("exact_grover", {{"alpha", "1/2"}});
  EXPECT_FALSE(c.passed);
  EXPECT_FALSE(c.failure.empty());
}

TEST(Catalog, DefaultListCoversEveryPrimitive) {
  const auto calls = default_catalog();
  std::set<std::string> names;
  for (const auto& c : calls) names.insert(c.name);
  for (const auto& [name, keys] : primitive_names()) {
    EXPECT_TRUE(names.count(name)) << name;
  }
}

TEST(Acceptance, FilterSelectsOneRow) {
  AcceptanceConfig cfg;
  cfg.filter = {"3"};
  const auto rep = run_acceptance(cfg);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].id, "3-symmetric");
  EXPECT_TRUE(rep.pass());
}

TEST(Acceptance, UnknownFilterIsConfigError) {
  AcceptanceConfig cfg;
  cfg.filter = {"99"};
  EXPECT_THROW(run_acceptance(cfg), ConfigError);
}

TEST(Acceptance, ReportIsStable) {
  AcceptanceConfig cfg;
  cfg.filter = {"1-exact-dicke", "7"};
  const auto a = run_acceptance(cfg);
  const auto b = run_acceptance(cfg);
  EXPECT_EQ(report_text(a), report_text(b));
  EXPECT_EQ(report_json(a, false).dump(), report_json(b, false).dump());
  EXPECT_EQ(report_text(a).find(" s)"), std::string::npos);
  EXPECT_TRUE(report_json(a, true)["rows"][0].contains("seconds"));
}

}  // namespace
}  // namespace symprep::harness

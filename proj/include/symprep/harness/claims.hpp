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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symprep/harness/grid.hpp"

namespace symprep::harness {

/** One check of one claim at one grid point. */
struct ClaimVerdict {
  std::string id;
  std::string params;    // "m=4 k=2 j=1"
  std::string lhs;
  std::string relation;  // "<=", ">=", "==", "in"
  std::string rhs;
  bool pass = false;
  double seconds = 0.0;  // wall time of the grid point, not in reports
};

struct ClaimInfo {
  std::string id;
  std::string statement;
};

/** Every claim the sweep knows, in run order. */
const std::vector<ClaimInfo>& claim_catalog();

/**
 * Runs the selected claims over the grid. Verdicts come back sorted by
 * claim then grid point, whatever the worker count. Throws ConfigError
 * for an invalid config or an unknown claim id.
 */
std::vector<ClaimVerdict> run_claims(const SweepConfig& cfg);

bool all_pass(const std::vector<ClaimVerdict>& verdicts);

/** Fixed-width table, one row per verdict, then per-claim totals. */
std::string claims_table(const std::vector<ClaimVerdict>& verdicts);

nlohmann::json claims_json(const std::vector<ClaimVerdict>& verdicts,
                           bool with_seconds);

/**
 * Writes claims.txt and claims.json (no timings) and claims_timing.json
 * under dir. Throws std::runtime_error naming the path on I/O failure.
 */
void write_claims(const std::filesystem::path& dir,
                  const std::vector<ClaimVerdict>& verdicts);

/** Shared by the report writers. */
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace symprep::harness

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

struct AcceptanceConfig {
  int workers = 1;
  double tol = 1e-9;
  // criterion ids ("3-symmetric") or bare numbers ("3"); all when empty
  std::vector<std::string> filter;
  GridSpec grid;
};

struct CriterionResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;
  double seconds = 0.0;  // kept out of the text report
};

struct AcceptanceReport {
  std::vector<CriterionResult> rows;
  bool pass() const;
};

/** Criterion ids with titles, in run order. */
std::vector<std::pair<std::string, std::string>> criteria();

/**
 * Runs the selected criteria. Throws ConfigError for a filter entry that
 * matches nothing.
 */
AcceptanceReport run_acceptance(const AcceptanceConfig& cfg);

/** Byte-stable text: no timings, fixed number formats. */
std::string report_text(const AcceptanceReport& report);
nlohmann::json report_json(const AcceptanceReport& report, bool with_seconds);

/** acceptance.txt, acceptance.json and acceptance_timing.json under dir. */
void write_acceptance(const std::filesystem::path& dir,
                      const AcceptanceReport& report);

}  // namespace symprep::harness

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

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symprep::harness {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** Inclusive integer range; empty when lo > hi. */
struct Range {
  int lo = 1;
  int hi = 0;
  bool empty() const { return lo > hi; }
};

/**
 * Sweep ranges for the claim checks. Parsed from "m=1..64,k=1..6" style
 * specs; keys left out keep their defaults.
 */
struct GridSpec {
  Range m{1, 64};
  Range k{1, 6};
  int slice_max = 20;      // enumeration limit on m*j
  int enumerate_max = 20;  // largest n for the occupancy oracle
};

GridSpec parse_grid(const std::string& spec);

enum class Fault { None, LambdaOffByOne };

struct SweepConfig {
  GridSpec grid;
  double tol = 1e-9;
  int workers = 1;
  std::string out_dir;
  // claim ids to run, all when empty
  std::vector<std::string> claims;
  Fault fault = Fault::None;
};

/** Throws ConfigError on empty ranges or a non-positive tolerance. */
void validate(const SweepConfig& cfg);

/**
 * Calls body(i) for i in [0, count) on up to workers threads. The first
 * exception thrown by any call is rethrown after all threads stop.
 */
void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace symprep::harness

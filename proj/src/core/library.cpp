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

#include "symprep/core/library.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace symprep {

Gate LibraryOp::on(std::vector<QubitId> targets) const {
  return Gate::library(tag, map, std::move(targets), cost);
}

int binary_width(int k) {
  return static_cast<int>(OneHotMap::binary_width(k));
}

SparseState dicke_state(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 40) {
    throw PreconditionError("dicke_state: need 0 <= k <= n <= 40");
  }
  // walk the k-subsets of [n] in colex order
  std::vector<SparseState::Entry> entries;
  if (k == 0) {
    entries.emplace_back(0, 1.0);
  } else {
    std::uint64_t x = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (x < limit) {
      entries.emplace_back(x, 1.0);
      const std::uint64_t c = x & (~x + 1);
      const std::uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(entries.size()));
  for (auto& e : entries) e.second = amp;
  return SparseState(static_cast<std::size_t>(n), std::move(entries));
}

LibraryOp threshold_op(int n, int t) {
  if (n < 1 || t < 0) throw PreconditionError("threshold: bad parameters");
  return {"threshold",
          std::make_shared<XorMap>(XorMap::Function::Threshold,
                                   static_cast<std::size_t>(n), t),
          {cost_table::kThresholdDepth, std::max(t, 1), 0, {}}};
}

LibraryOp exact_op(int n, int t) {
  if (n < 1 || t < 0) throw PreconditionError("exact: bad parameters");
  return {"exact",
          std::make_shared<XorMap>(XorMap::Function::Exact,
                                   static_cast<std::size_t>(n), t),
          {cost_table::kExactDepth, t + 1, 0, {}}};
}

LibraryOp one_hot_op(int k) {
  return {"one_hot", std::make_shared<OneHotMap>(k),
          {cost_table::kOneHotDepth, k, 0, {}}};
}

LibraryOp zero_w_op(int n) {
  if (n < 1) throw PreconditionError("zero_w: n must be positive");
  const auto size = static_cast<std::size_t>(n);
  auto make = [n, size] {
    std::vector<SparseState::Entry> e;
    e.emplace_back(0, 1.0 / std::sqrt(2.0));
    const double a = 1.0 / std::sqrt(2.0 * n);
    for (int i = 0; i < n; ++i) e.emplace_back(std::uint64_t{1} << i, a);
    return SparseState(size, std::move(e));
  };
  return {"zero_w", std::make_shared<StatePrepMap>(size, make),
          {cost_table::kZeroWDepth, 1, 0, {}}};
}

LibraryOp dicke_prep_op(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw PreconditionError("dicke_prep: need 0 <= k <= n, n >= 1");
  }
  return {"dicke_prep",
          std::make_shared<StatePrepMap>(static_cast<std::size_t>(n),
                                         [n, k] { return dicke_state(n, k); }),
          {cost_table::kDickePrepDepth, n, 0, {}}};
}

LibraryOp w_swap_op(int t, int s) {
  return {"w_controlled_swap", std::make_shared<WSwapMap>(t, s),
          {cost_table::kWSwapDepth, s, 0, {}}};
}

LibraryOp oracle_prep_op(const std::string& tag, SparseState state) {
  return {tag, std::make_shared<StatePrepMap>(std::move(state)),
          {cost_table::kOracleDepth, 0, 0, {}}};
}

}  // namespace symprep

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

#include "symprep/synth/targets.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "symprep/core/library.hpp"

namespace symprep::synth {

namespace {

bool fits(int n, int k, int ell) {
  return ell >= k && n % ell == 0 && n / ell >= k;
}

}  // namespace

BucketPlan plan_buckets(int n, int k, std::optional<int> ell) {
  if (k < 1 || k > n) {
    throw DomainError("bucket plan needs 1 <= k <= n, got n=" +
                      std::to_string(n) + " k=" + std::to_string(k));
  }
  BucketPlan p{n, k, 0, n, 0};
  if (ell) {
    if (*ell < k) throw DomainError("bucket plan needs ell >= k");
    p.ell = *ell;
    p.n_prime = *ell * ((n + *ell - 1) / *ell);
  } else {
    const int cube = k * k * k;
    for (int e = cube; e >= k && p.ell == 0; --e) {
      if (fits(n, k, e)) p.ell = e;
    }
    if (p.ell == 0) {
      p.ell = k;
      p.n_prime = std::max(k * ((n + k - 1) / k), k * k);
    }
  }
  p.m = p.n_prime / p.ell;
  if (p.m < k) {
    throw DomainError("buckets of " + std::to_string(p.m) +
                      " qubits cannot hold weight " + std::to_string(k));
  }
  return p;
}

SparseState occupancy_target(int n, int k, int ell) {
  if (ell < 1 || n % ell != 0 || k < 1 || k > ell || n > 40) {
    throw DomainError("occupancy target: bad dimensions");
  }
  const int m = n / ell;
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  const SparseState d = dicke_state(n, k);
  std::vector<SparseState::Entry> e;
  for (const auto& [x, a] : d.entries()) {
    int occ = 0;
    for (int b = 0; b < ell; ++b) {
      if ((x >> (b * m)) & mask) ++occ;
    }
    e.emplace_back(x | (std::uint64_t{1} << (n + occ - 1)), a);
  }
  return SparseState(static_cast<std::size_t>(n + k), std::move(e));
}

SparseState symmetric_target(int n, const std::vector<Complex>& eta) {
  double norm = 0.0;
  for (const auto& a : eta) norm += std::norm(a);
  if (eta.empty() || std::abs(norm - 1.0) > 1e-10) {
    throw DomainError("symmetric target: eta is not unit norm");
  }
  if (static_cast<int>(eta.size()) > n + 1) {
    throw DomainError("symmetric target: weight above n");
  }
  std::vector<SparseState::Entry> e;
  for (std::size_t k = 0; k < eta.size(); ++k) {
    if (eta[k] == Complex{}) continue;
    const SparseState d = dicke_state(n, static_cast<int>(k));
    for (const auto& [x, a] : d.entries()) {
      e.emplace_back(x, a * eta[k]);
    }
  }
  return SparseState(static_cast<std::size_t>(n), std::move(e));
}

sim::VerificationResult verify(const SynthesisOutput& out, double tol) {
  return sim::check_clean_preparation(out.circuit, out.data, out.target, tol);
}

double weight_class_spread(const std::vector<Complex>& amplitudes) {
  const std::size_t n = std::bit_width(amplitudes.size()) - 1;
  double spread = 0.0;
  for (std::size_t w = 0; w <= n; ++w) {
    double top = 0.0;
    Complex first{};
    bool seen = false;
    double dev = 0.0;
    for (std::uint64_t x = 0; x < amplitudes.size(); ++x) {
      if (static_cast<std::size_t>(std::popcount(x)) != w) continue;
      top = std::max(top, std::abs(amplitudes[x]));
      if (!seen) {
        first = amplitudes[x];
        seen = true;
      }
      dev = std::max(dev, std::abs(amplitudes[x] - first));
    }
    if (top > 1e-12) spread = std::max(spread, dev / top);
  }
  return spread;
}

}  // namespace symprep::synth

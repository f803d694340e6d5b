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

#include "symprep/harness/grid.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace symprep::harness {

namespace {

int parse_int(const std::string& s, const std::string& spec) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("bad number '" + s + "' in grid spec '" + spec + "'");
  }
  return v;
}

Range parse_range(const std::string& s, const std::string& spec) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(s, spec);
    return {v, v};
  }
  return {parse_int(s.substr(0, dots), spec),
          parse_int(s.substr(dots + 2), spec)};
}

}  // namespace

GridSpec parse_grid(const std::string& spec) {
  GridSpec g;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("grid item '" + item + "' needs key=value");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "m") {
      g.m = parse_range(value, spec);
    } else if (key == "k") {
      g.k = parse_range(value, spec);
    } else if (key == "slice") {
      g.slice_max = parse_int(value, spec);
    } else if (key == "enumerate") {
      g.enumerate_max = parse_int(value, spec);
    } else {
      throw ConfigError("unknown grid key '" + key + "'");
    }
  }
  return g;
}

void validate(const SweepConfig& cfg) {
  const GridSpec& g = cfg.grid;
  if (g.m.empty() || g.k.empty()) throw ConfigError("grid is empty");
  if (g.m.lo < 1 || g.k.lo < 1) throw ConfigError("grid ranges start at 1");
  if (g.k.lo > g.m.hi) throw ConfigError("grid is empty: no k <= m");
  if (!(cfg.tol > 0.0)) throw ConfigError("tolerance must be positive");
  if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
}

void parallel_for(std::size_t count, int workers,
                  const std::function<void(std::size_t)>& body) {
  if (count == 0) return;
  const auto threads = static_cast<std::size_t>(
      std::clamp<long long>(workers, 1, static_cast<long long>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace symprep::harness

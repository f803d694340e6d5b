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

#include "symprep/harness/claims.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "symprep/dist/damped_binomial.hpp"
#include "symprep/dist/exact.hpp"
#include "symprep/dist/occupancy.hpp"
#include "symprep/dist/oracles.hpp"

namespace symprep::harness {

namespace {

using dist::HighPrec;
using dist::Rational;

std::string dec(const Rational& r) { return dist::to_string(dist::to_high(r)); }
std::string dec(const HighPrec& x) { return dist::to_string(x); }

std::string params(std::initializer_list<std::pair<const char*, int>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += ' ';
    s += k;
    s += '=';
    s += std::to_string(v);
  }
  return s;
}

ClaimVerdict verdict(const char* id, std::string p, std::string lhs,
                     const char* rel, std::string rhs, bool pass) {
  return ClaimVerdict{id, std::move(p), std::move(lhs), rel, std::move(rhs),
                      pass, 0.0};
}

// One unit of work; may produce several rows.
using Task = std::function<std::vector<ClaimVerdict>()>;

int k_top(const GridSpec& g, int m) { return std::min(m, g.k.hi); }

// ell values checked against the ratio bound for a given k
std::vector<int> ratio_ells(int k) {
  const int c = k * k * k;
  std::set<int> s = {c, c + 1, 2 * c};
  return {s.begin(), s.end()};
}

void lambda_bounds(const SweepConfig& cfg, std::vector<Task>& out) {
  for (int m = cfg.grid.m.lo; m <= cfg.grid.m.hi; ++m) {
    for (int k = cfg.grid.k.lo; k <= k_top(cfg.grid, m); ++k) {
      const bool fault = cfg.fault == Fault::LambdaOffByOne;
      out.push_back([m, k, fault] {
        Rational lam = dist::damped_binomial(m, k).lambda;
        if (fault) lam += 1;
        const Rational lo(k * k, k + 1);
        const bool ok = lo <= lam && lam <= k;
        return std::vector{verdict(
            "lambda-bounds", params({{"m", m}, {"k", k}}), dist::to_string(lam),
            "in", "[" + dist::to_string(lo) + ", " + std::to_string(k) + "]",
            ok)};
      });
    }
  }
}

void binomial_domination(const SweepConfig& cfg, std::vector<Task>& out) {
  for (int m = cfg.grid.m.lo; m <= cfg.grid.m.hi; ++m) {
    for (int k = cfg.grid.k.lo; k <= k_top(cfg.grid, m); ++k) {
      out.push_back([m, k] {
        const auto d = dist::damped_binomial(m, k);
        std::vector<ClaimVerdict> rows;
        for (int j = 1; j <= k; ++j) {
          const Rational lhs = d.pmf(j);
          const Rational rhs = 4 * dist::binomial_one_over_m(m, j);
          rows.push_back(verdict("binomial-domination",
                                 params({{"m", m}, {"k", k}, {"j", j}}),
                                 dec(lhs), "<=", dec(rhs), lhs <= rhs));
        }
        return rows;
      });
    }
  }
}

void slice_uniformity(const SweepConfig& cfg, std::vector<Task>& out) {
  for (int m = cfg.grid.m.lo; m <= cfg.grid.m.hi; ++m) {
    for (int k = cfg.grid.k.lo; k <= k_top(cfg.grid, m); ++k) {
      for (int j = 1; m * j <= cfg.grid.slice_max; ++j) {
        out.push_back([m, k, j] {
          const auto r = dist::slice_uniformity(m, k, j);
          const std::string lhs = std::string(r.uniform ? "uniform" : "skewed") +
                                  ", total " + dist::to_string(r.total);
          return std::vector{verdict(
              "slice-uniformity", params({{"m", m}, {"k", k}, {"j", j}}), lhs,
              "==", "uniform, total 1", r.uniform && r.total == 1)};
        });
      }
    }
  }
}

void ratio_bound(const SweepConfig& cfg, std::vector<Task>& out) {
  const HighPrec e2 = dist::exp_ratio(2, 1);
  for (int k = cfg.grid.k.lo; k <= cfg.grid.k.hi; ++k) {
    for (int ell : ratio_ells(k)) {
      for (int m = std::max(k, cfg.grid.m.lo); m <= cfg.grid.m.hi; ++m) {
        out.push_back([m, k, ell, e2] {
          const auto o = dist::ratio_report(m * ell, k, ell);
          std::vector<ClaimVerdict> rows;
          for (int j = 1; j < static_cast<int>(o.r.size()); ++j) {
            if (o.p[static_cast<std::size_t>(j)] == 0) continue;
            const HighPrec lhs = dist::to_high(o.r[static_cast<std::size_t>(j)]);
            const HighPrec rhs = e2 * boost::multiprecision::pow(HighPrec(k), j - k);
            rows.push_back(verdict(
                "ratio-bound",
                params({{"n", m * ell}, {"k", k}, {"ell", ell}, {"j", j}}),
                dec(lhs), "<=", dec(rhs), lhs <= rhs));
          }
          return rows;
        });
      }
    }
  }
}

void hit_prob_lower_bound(const SweepConfig& cfg, std::vector<Task>& out) {
  for (int m = cfg.grid.m.lo; m <= cfg.grid.m.hi; ++m) {
    for (int k = cfg.grid.k.lo; k <= k_top(cfg.grid, m); ++k) {
      out.push_back([m, k] {
        const Rational lhs = dist::hybrid_hit_prob(m, k, k, k);
        const Rational rhs = dist::pow(Rational(k, k + 1), k);
        return std::vector{verdict("hit-prob-lower-bound",
                                   params({{"m", m}, {"k", k}}), dec(lhs), ">=",
                                   dec(rhs), lhs >= rhs)};
      });
    }
  }
}

void weight_ratio_sum_bound(const SweepConfig& cfg, std::vector<Task>& out) {
  const HighPrec bound = 2 * dist::exp_ratio(4, 1);
  for (int ks = cfg.grid.k.lo; ks <= cfg.grid.k.hi; ++ks) {
    const int ell = ks * ks * ks;
    for (int m = std::max(ks, cfg.grid.m.lo); m <= cfg.grid.m.hi; ++m) {
      out.push_back([m, ks, ell, bound] {
        std::vector<ClaimVerdict> rows;
        for (int k = 1; k <= ks; ++k) {
          const auto o = dist::ratio_report(m * ell, k, ell, ks);
          const HighPrec lhs = dist::to_high(o.R);
          rows.push_back(verdict(
              "weight-ratio-sum-bound",
              params({{"n", m * ell}, {"k_star", ks}, {"k", k}, {"ell", ell}}),
              dec(lhs), "<=", dec(bound), lhs <= bound));
        }
        return rows;
      });
    }
  }
}

void damping_lower_bound(const SweepConfig& cfg, std::vector<Task>& out) {
  for (int m = cfg.grid.m.lo; m <= cfg.grid.m.hi; ++m) {
    for (int ks = cfg.grid.k.lo; ks <= k_top(cfg.grid, m); ++ks) {
      out.push_back([m, ks] {
        std::vector<ClaimVerdict> rows;
        for (int k = 1; k <= ks; ++k) {
          for (int j = 1; j <= k; ++j) {
            const HighPrec lhs = dist::to_high(dist::all_light_prob(m, ks, j, k));
            const HighPrec rhs = dist::exp_ratio(-2 * j, k);
            rows.push_back(verdict(
                "damping-lower-bound",
                params({{"m", m}, {"k_star", ks}, {"k", k}, {"j", j}}), dec(lhs),
                ">=", dec(rhs), lhs >= rhs));
          }
        }
        return rows;
      });
    }
  }
}

void occupancy_oracle(const SweepConfig& cfg, std::vector<Task>& out) {
  for (int n = 1; n <= cfg.grid.enumerate_max; ++n) {
    for (int ell = 1; ell <= n; ++ell) {
      if (n % ell != 0) continue;
      out.push_back([n, ell] {
        std::vector<ClaimVerdict> rows;
        for (int k = 0; k <= n; ++k) {
          if (dist::binomial(n, k) > dist::kEnumerationCap) continue;
          const auto a = dist::occupancy_pmf(n, k, ell);
          const auto b = dist::occupancy_pmf_enumerated(n, k, ell);
          rows.push_back(verdict("occupancy-oracle",
                                 params({{"n", n}, {"k", k}, {"ell", ell}}),
                                 "closed form", "==", "enumeration", a == b));
        }
        return rows;
      });
    }
  }
}

void hit_prob_oracle(const SweepConfig& cfg, std::vector<Task>& out) {
  // enumeration walks 2^(m j) strings per check
  const int limit = std::min(cfg.grid.slice_max, 16);
  for (int m = cfg.grid.m.lo; m <= std::min(cfg.grid.m.hi, limit); ++m) {
    for (int kc = cfg.grid.k.lo; kc <= k_top(cfg.grid, m); ++kc) {
      out.push_back([m, kc, limit] {
        std::vector<ClaimVerdict> rows;
        for (int k = 1; k <= kc; ++k) {
          for (int j = 1; j <= k && m * j <= limit; ++j) {
            const Rational conv = dist::hybrid_hit_prob(m, kc, j, k);
            const Rational closed = dist::hybrid_hit_prob_closed(m, kc, j, k);
            const Rational walk = dist::hybrid_hit_prob_enumerated(m, kc, j, k);
            rows.push_back(verdict(
                "hit-prob-oracle",
                params({{"m", m}, {"k_cap", kc}, {"k", k}, {"j", j}}),
                dec(conv), "==", "closed form and enumeration",
                conv == closed && conv == walk));
          }
        }
        return rows;
      });
    }
  }
}

struct ClaimDef {
  ClaimInfo info;
  void (*expand)(const SweepConfig&, std::vector<Task>&);
};

const std::vector<ClaimDef>& definitions() {
  static const std::vector<ClaimDef> defs = {
      {{"lambda-bounds", "k^2/(k+1) <= lambda <= k"}, lambda_bounds},
      {{"binomial-domination", "s(j) <= 4 Pr[Binom(m,1/m) = j]"},
       binomial_domination},
      {{"slice-uniformity",
        "(S^m_k)^j is uniform on each weight slice, by enumeration"},
       slice_uniformity},
      {{"ratio-bound", "p(j)/q(j) <= e^2 k^(j-k) for ell >= k^3"},
       ratio_bound},
      {{"hit-prob-lower-bound", "q(k) >= (k/(k+1))^k"}, hit_prob_lower_bound},
      {{"weight-ratio-sum-bound", "R_k <= 2 e^4 for ell = k_star^3"},
       weight_ratio_sum_bound},
      {{"damping-lower-bound",
        "Pr[j samples of S^m_{k_star} all weigh <= k] >= e^(-2j/k)"},
       damping_lower_bound},
      {{"occupancy-oracle", "occupancy pmf equals enumeration"},
       occupancy_oracle},
      {{"hit-prob-oracle",
        "hit probability by convolution, closed form and enumeration agree"},
       hit_prob_oracle},
  };
  return defs;
}

}  // namespace

const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& d : definitions()) v.push_back(d.info);
    return v;
  }();
  return infos;
}

std::vector<ClaimVerdict> run_claims(const SweepConfig& cfg) {
  validate(cfg);
  for (const auto& id : cfg.claims) {
    const auto& defs = definitions();
    if (std::none_of(defs.begin(), defs.end(),
                     [&](const ClaimDef& d) { return d.info.id == id; })) {
      throw ConfigError("unknown claim id '" + id + "'");
    }
  }
  std::vector<Task> tasks;
  for (const auto& d : definitions()) {
    if (!cfg.claims.empty() &&
        std::find(cfg.claims.begin(), cfg.claims.end(), d.info.id) ==
            cfg.claims.end()) {
      continue;
    }
    d.expand(cfg, tasks);
  }
  if (tasks.empty()) throw ConfigError("grid is empty for the selected claims");

  std::vector<std::vector<ClaimVerdict>> results(tasks.size());
  parallel_for(tasks.size(), cfg.workers, [&](std::size_t i) {
    const auto t0 = std::chrono::steady_clock::now();
    results[i] = tasks[i]();
    const std::chrono::duration<double> dt =
        std::chrono::steady_clock::now() - t0;
    for (auto& r : results[i]) r.seconds = dt.count();
  });
  std::vector<ClaimVerdict> all;
  for (auto& r : results) {
    for (auto& v : r) all.push_back(std::move(v));
  }
  return all;
}

bool all_pass(const std::vector<ClaimVerdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const ClaimVerdict& v) { return v.pass; });
}

std::string claims_table(const std::vector<ClaimVerdict>& verdicts) {
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-24s %-34s %-22s %-3s %-28s %s\n", "id",
                "params", "lhs", "rel", "rhs", "verdict");
  os << line;
  std::map<std::string, std::pair<int, int>> totals;
  std::vector<std::string> order;
  for (const auto& v : verdicts) {
    std::snprintf(line, sizeof line, "%-24s %-34s %-22s %-3s %-28s %s\n",
                  v.id.c_str(), v.params.c_str(), v.lhs.c_str(),
                  v.relation.c_str(), v.rhs.c_str(), v.pass ? "PASS" : "FAIL");
    os << line;
    auto [it, fresh] = totals.try_emplace(v.id, 0, 0);
    if (fresh) order.push_back(v.id);
    ++it->second.first;
    if (!v.pass) ++it->second.second;
  }
  os << "\n";
  for (const auto& id : order) {
    const auto [n, bad] = totals[id];
    std::snprintf(line, sizeof line, "%-24s %6d points %6d failures\n",
                  id.c_str(), n, bad);
    os << line;
  }
  return os.str();
}

nlohmann::json claims_json(const std::vector<ClaimVerdict>& verdicts,
                           bool with_seconds) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& v : verdicts) {
    nlohmann::json r = {{"id", v.id},         {"params", v.params},
                        {"lhs", v.lhs},       {"relation", v.relation},
                        {"rhs", v.rhs},       {"verdict", v.pass ? "pass" : "fail"}};
    if (with_seconds) r["seconds"] = v.seconds;
    rows.push_back(std::move(r));
  }
  return {{"pass", all_pass(verdicts)}, {"rows", std::move(rows)}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

void write_claims(const std::filesystem::path& dir,
                  const std::vector<ClaimVerdict>& verdicts) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
  write_text(dir / "claims.txt", claims_table(verdicts));
  write_text(dir / "claims.json", claims_json(verdicts, false).dump(2) + "\n");
  write_text(dir / "claims_timing.json", claims_json(verdicts, true).dump(2) + "\n");
}

}  // namespace symprep::harness

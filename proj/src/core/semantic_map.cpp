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

#include "symprep/core/semantic_map.hpp"

#include <bit>
#include <cmath>
#include <utility>

namespace symprep {

namespace {

constexpr double kDomainTol = 1e-12;

nlohmann::json state_to_json(const SparseState& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [i, a] : s.entries()) {
    entries.push_back({i, a.real(), a.imag()});
  }
  return {{"qubits", s.num_qubits()}, {"entries", entries}};
}

SparseState state_from_json(const nlohmann::json& j) {
  std::vector<SparseState::Entry> entries;
  for (const auto& e : j.at("entries")) {
    entries.emplace_back(e.at(0).get<std::uint64_t>(),
                         Complex(e.at(1).get<double>(), e.at(2).get<double>()));
  }
  return SparseState(j.at("qubits").get<std::size_t>(), std::move(entries));
}

std::uint64_t mask(std::size_t bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

}  // namespace

// ---------------------------------------------------------------- state prep

StatePrepMap::StatePrepMap(std::size_t arity, std::function<SparseState()> make)
    : arity_(arity), make_(std::move(make)) {}

StatePrepMap::StatePrepMap(SparseState state)
    : arity_(state.num_qubits()) {
  auto shared = std::make_shared<SparseState>(std::move(state));
  make_ = [shared] { return *shared; };
}

void StatePrepMap::materialize() const {
  std::call_once(once_, [this] {
    state_ = make_();
    if (state_.num_qubits() != arity_) {
      throw PreconditionError("state_prep: state width differs from arity");
    }
    reflector_ = std::make_unique<ZeroReflector>(state_);
  });
}

const SparseState& StatePrepMap::state() const {
  materialize();
  return state_;
}

void StatePrepMap::apply(std::span<Complex> block, bool inverse) const {
  materialize();
  reflector_->apply(block, inverse);
}

nlohmann::json StatePrepMap::params() const {
  return {{"state", state_to_json(state())}};
}

// ------------------------------------------------------- controlled prep

ControlledPrepMap::ControlledPrepMap(
    std::size_t num_controls, std::size_t num_targets, Domain domain,
    std::function<std::vector<Branch>()> make)
    : controls_(num_controls),
      targets_(num_targets),
      domain_(domain),
      make_(std::move(make)) {
  if (controls_ > 20) throw PreconditionError("controlled_prep: too wide");
}

ControlledPrepMap::ControlledPrepMap(std::size_t num_controls,
                                     std::size_t num_targets, Domain domain,
                                     std::vector<Branch> branches)
    : controls_(num_controls), targets_(num_targets), domain_(domain) {
  if (controls_ > 20) throw PreconditionError("controlled_prep: too wide");
  auto shared = std::make_shared<std::vector<Branch>>(std::move(branches));
  make_ = [shared] { return *shared; };
}

void ControlledPrepMap::materialize() const {
  std::call_once(once_, [this] {
    branches_ = make_();
    slot_.assign(std::size_t{1} << controls_, -1);
    for (std::size_t b = 0; b < branches_.size(); ++b) {
      const auto& br = branches_[b];
      if (br.pattern >> controls_ || slot_[br.pattern] != -1) {
        throw PreconditionError("controlled_prep: bad branch pattern");
      }
      if (br.state.num_qubits() != targets_) {
        throw PreconditionError("controlled_prep: branch width mismatch");
      }
      slot_[br.pattern] = static_cast<int>(b);
      reflectors_.push_back(std::make_unique<ZeroReflector>(br.state));
    }
  });
}

const std::vector<ControlledPrepMap::Branch>& ControlledPrepMap::branches()
    const {
  materialize();
  return branches_;
}

void ControlledPrepMap::apply(std::span<Complex> block, bool inverse) const {
  materialize();
  const std::size_t num_patterns = std::size_t{1} << controls_;
  const std::size_t sub = std::size_t{1} << targets_;
  std::vector<Complex> buf(sub);
  for (std::size_t p = 0; p < num_patterns; ++p) {
    const int slot = slot_[p];
    if (slot < 0) {
      if (domain_ == Domain::WeightAtMostOne && std::popcount(p) > 1) {
        for (std::size_t t = 0; t < sub; ++t) {
          if (std::abs(block[p | (t << controls_)]) > kDomainTol) {
            throw DomainError(
                "controlled_prep: amplitude on a control pattern of weight "
                "above one");
          }
        }
      }
      continue;
    }
    for (std::size_t t = 0; t < sub; ++t) buf[t] = block[p | (t << controls_)];
    reflectors_[slot]->apply(buf, inverse);
    for (std::size_t t = 0; t < sub; ++t) block[p | (t << controls_)] = buf[t];
  }
}

nlohmann::json ControlledPrepMap::params() const {
  nlohmann::json br = nlohmann::json::array();
  for (const auto& b : branches()) {
    br.push_back({{"pattern", b.pattern}, {"state", state_to_json(b.state)}});
  }
  return {{"controls", controls_},
          {"targets", targets_},
          {"domain", domain_ == Domain::Any ? "any" : "weight_le_1"},
          {"branches", br}};
}

// ------------------------------------------------------------------- xor

XorMap::XorMap(Function f, std::size_t num_inputs, int param)
    : f_(f), inputs_(num_inputs), outputs_(1), param_(param) {
  if (param_ < 0) throw PreconditionError("xor map: negative parameter");
  if (f_ == Function::Ham) outputs_ = static_cast<std::size_t>(param_) + 1;
  if ((f_ == Function::LadderLe || f_ == Function::LadderEq) &&
      static_cast<std::size_t>(param_) > inputs_) {
    throw PreconditionError("xor map: ladder selector wider than input");
  }
}

bool XorMap::in_domain(std::uint64_t x) const {
  if (f_ == Function::LadderLe || f_ == Function::LadderEq) {
    return std::popcount(x & mask(static_cast<std::size_t>(param_))) <= 1;
  }
  return true;
}

std::uint64_t XorMap::evaluate(std::uint64_t x) const {
  const int w = std::popcount(x);
  switch (f_) {
    case Function::Threshold:
      return w >= param_ ? 1 : 0;
    case Function::Exact:
      return w == param_ ? 1 : 0;
    case Function::Ham: {
      const int h = std::min(param_ + 1, w);
      return h == 0 ? 0 : std::uint64_t{1} << (h - 1);
    }
    case Function::LadderLe:
    case Function::LadderEq: {
      const auto k = static_cast<std::size_t>(param_);
      const std::uint64_t a = x & mask(k);
      if (a == 0 || std::popcount(a) > 1) return 0;
      const int j = std::countr_zero(a) + 1;
      const int wx = std::popcount(x >> k);
      if (f_ == Function::LadderLe) return wx <= j ? 1 : 0;
      return wx == j ? 1 : 0;
    }
  }
  return 0;
}

void XorMap::apply(std::span<Complex> block, bool /*inverse*/) const {
  std::vector<Complex> out(block.size());
  const std::uint64_t in_mask = mask(inputs_);
  for (std::size_t idx = 0; idx < block.size(); ++idx) {
    const std::uint64_t x = idx & in_mask;
    if (!in_domain(x)) {
      if (std::abs(block[idx]) > kDomainTol) {
        throw DomainError("xor map: ladder selector of weight above one");
      }
      out[idx] = block[idx];
      continue;
    }
    out[idx ^ (evaluate(x) << inputs_)] = block[idx];
  }
  std::copy(out.begin(), out.end(), block.begin());
}

nlohmann::json XorMap::params() const {
  const char* name = "threshold";
  switch (f_) {
    case Function::Threshold: name = "threshold"; break;
    case Function::Exact: name = "exact"; break;
    case Function::Ham: name = "ham"; break;
    case Function::LadderLe: name = "ladder_le"; break;
    case Function::LadderEq: name = "ladder_eq"; break;
  }
  return {{"function", name}, {"inputs", inputs_}, {"param", param_}};
}

// --------------------------------------------------------------- one hot

std::size_t OneHotMap::binary_width(int k) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < static_cast<std::size_t>(k) + 1) ++b;
  return b;
}

OneHotMap::OneHotMap(int k) : k_(k), bits_(binary_width(k)) {
  if (k_ < 1) throw PreconditionError("one_hot: k must be positive");
}

void OneHotMap::apply(std::span<Complex> block, bool /*inverse*/) const {
  for (int i = 1; i <= k_; ++i) {
    const std::uint64_t a = static_cast<std::uint64_t>(i);
    const std::uint64_t b = std::uint64_t{1} << (bits_ + i - 1);
    std::swap(block[a], block[b]);
  }
}

nlohmann::json OneHotMap::params() const { return {{"k", k_}}; }

// ---------------------------------------------------------------- w swap

WSwapMap::WSwapMap(int t, int s) : t_(t), s_(s) {
  if (t_ < 1 || s_ < 1) throw PreconditionError("w_swap: bad sizes");
}

void WSwapMap::apply(std::span<Complex> block, bool /*inverse*/) const {
  const auto t = static_cast<std::size_t>(t_);
  const auto s = static_cast<std::size_t>(s_);
  const std::uint64_t smask = mask(s);
  const std::size_t star = t + t * s;
  for (std::uint64_t idx = 0; idx < block.size(); ++idx) {
    const std::uint64_t a = idx & mask(t);
    const int w = std::popcount(a);
    if (w == 0) continue;
    if (w > 1) {
      if (std::abs(block[idx]) > kDomainTol) {
        throw DomainError("w_swap: selector of weight above one");
      }
      continue;
    }
    const std::size_t off = t + static_cast<std::size_t>(std::countr_zero(a)) * s;
    const std::uint64_t qi = (idx >> off) & smask;
    const std::uint64_t qs = (idx >> star) & smask;
    std::uint64_t partner = idx & ~(smask << off) & ~(smask << star);
    partner |= (qs << off) | (qi << star);
    if (idx < partner) std::swap(block[idx], block[partner]);
  }
}

nlohmann::json WSwapMap::params() const { return {{"t", t_}, {"s", s_}}; }

// --------------------------------------------------------------- registry

nlohmann::json semantic_map_to_json(const SemanticMap& map) {
  return {{"family", std::string(map.family())},
          {"arity", map.arity()},
          {"params", map.params()}};
}

SemanticMapPtr semantic_map_from_json(const nlohmann::json& j) {
  const auto family = j.at("family").get<std::string>();
  const auto& p = j.at("params");
  if (family == "state_prep") {
    return std::make_shared<StatePrepMap>(state_from_json(p.at("state")));
  }
  if (family == "controlled_prep") {
    std::vector<ControlledPrepMap::Branch> branches;
    for (const auto& b : p.at("branches")) {
      branches.push_back(
          {b.at("pattern").get<std::uint64_t>(), state_from_json(b.at("state"))});
    }
    const auto dom = p.at("domain").get<std::string>() == "any"
                         ? ControlledPrepMap::Domain::Any
                         : ControlledPrepMap::Domain::WeightAtMostOne;
    return std::make_shared<ControlledPrepMap>(
        p.at("controls").get<std::size_t>(), p.at("targets").get<std::size_t>(),
        dom, std::move(branches));
  }
  if (family == "xor") {
    const auto name = p.at("function").get<std::string>();
    XorMap::Function f;
    if (name == "threshold") {
      f = XorMap::Function::Threshold;
    } else if (name == "exact") {
      f = XorMap::Function::Exact;
    } else if (name == "ham") {
      f = XorMap::Function::Ham;
    } else if (name == "ladder_le") {
      f = XorMap::Function::LadderLe;
    } else if (name == "ladder_eq") {
      f = XorMap::Function::LadderEq;
    } else {
      throw ParseError("unknown xor function '" + name + "'");
    }
    return std::make_shared<XorMap>(f, p.at("inputs").get<std::size_t>(),
                                    p.at("param").get<int>());
  }
  if (family == "one_hot") {
    return std::make_shared<OneHotMap>(p.at("k").get<int>());
  }
  if (family == "w_swap") {
    return std::make_shared<WSwapMap>(p.at("t").get<int>(), p.at("s").get<int>());
  }
  throw ParseError("unknown semantic map family '" + family + "'");
}

}  // namespace symprep

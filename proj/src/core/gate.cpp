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

#include "symprep/core/gate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "symprep/core/matrices.hpp"

namespace symprep {

std::vector<QubitId> concat(std::initializer_list<std::vector<QubitId>> parts) {
  std::vector<QubitId> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

namespace {

constexpr std::pair<GateKind, std::string_view> kKindNames[] = {
    {GateKind::Unitary, "unitary"},
    {GateKind::ControlledHermitian, "controlled_hermitian"},
    {GateKind::ProductReflection, "product_reflection"},
    {GateKind::And, "and"},
    {GateKind::Or, "or"},
    {GateKind::Nor, "nor"},
    {GateKind::Fanout, "fanout"},
    {GateKind::Swap, "swap"},
    {GateKind::Library, "library"},
};

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

GateKind gate_kind_from_string(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw ParseError("unknown gate kind '" + std::string(name) + "'");
}

void Gate::check_distinct() const {
  std::set<QubitId> seen;
  for (const auto& q : qubits()) {
    if (!seen.insert(q).second) {
      throw CircuitError("gate '" + std::string(to_string(kind_)) +
                         "' uses qubit " + std::to_string(q.index) + " twice");
    }
  }
}

Gate Gate::unitary(QubitId q, const Matrix2& m, std::string label) {
  if (!mat::is_unitary(m)) throw CircuitError("matrix is not unitary");
  Gate g;
  g.kind_ = GateKind::Unitary;
  g.targets_ = {q};
  g.matrix_ = m;
  g.label_ = std::move(label);
  return g;
}

Gate Gate::controlled_hermitian(std::vector<QubitId> controls, QubitId q,
                                const Matrix2& m, std::string label) {
  if (controls.empty()) {
    throw CircuitError("controlled gate needs at least one control");
  }
  if (!mat::is_unitary(m)) throw CircuitError("matrix is not unitary");
  if (!mat::is_hermitian(m)) {
    throw ControlError("controlled gate matrix is not Hermitian");
  }
  Gate g;
  g.kind_ = GateKind::ControlledHermitian;
  g.targets_ = {q};
  g.controls_ = std::move(controls);
  g.matrix_ = m;
  g.label_ = std::move(label);
  g.check_distinct();
  return g;
}

Gate Gate::product_reflection(std::vector<QubitId> qubits,
                              std::vector<std::array<Complex, 2>> states) {
  if (qubits.empty() || qubits.size() != states.size()) {
    throw CircuitError("product reflection: one state per qubit required");
  }
  for (const auto& s : states) {
    if (std::abs(std::norm(s[0]) + std::norm(s[1]) - 1.0) > 1e-12) {
      throw CircuitError("product reflection: state not normalized");
    }
  }
  Gate g;
  g.kind_ = GateKind::ProductReflection;
  g.targets_ = std::move(qubits);
  g.states_ = std::move(states);
  g.check_distinct();
  return g;
}

Gate Gate::zero_reflection(std::vector<QubitId> qubits) {
  std::vector<std::array<Complex, 2>> states(
      qubits.size(), {Complex(1.0, 0.0), Complex(0.0, 0.0)});
  return product_reflection(std::move(qubits), std::move(states));
}

Gate Gate::and_gate(std::vector<QubitId> inputs, QubitId out) {
  if (inputs.empty()) throw CircuitError("and gate needs inputs");
  Gate g;
  g.kind_ = GateKind::And;
  g.targets_ = std::move(inputs);
  g.targets_.push_back(out);
  g.check_distinct();
  return g;
}

Gate Gate::or_gate(std::vector<QubitId> inputs, QubitId out) {
  Gate g = and_gate(std::move(inputs), out);
  g.kind_ = GateKind::Or;
  return g;
}

Gate Gate::nor_gate(std::vector<QubitId> inputs, QubitId out) {
  Gate g = and_gate(std::move(inputs), out);
  g.kind_ = GateKind::Nor;
  return g;
}

Gate Gate::cnot(QubitId control, QubitId target) {
  return and_gate({control}, target);
}

Gate Gate::fanout(QubitId source, std::vector<QubitId> copies, bool widened) {
  if (copies.empty()) throw CircuitError("fanout needs at least one copy");
  Gate g;
  g.kind_ = GateKind::Fanout;
  g.targets_ = {source};
  g.targets_.insert(g.targets_.end(), copies.begin(), copies.end());
  g.widened_ = widened;
  g.check_distinct();
  return g;
}

Gate Gate::swap(QubitId a, QubitId b) {
  Gate g;
  g.kind_ = GateKind::Swap;
  g.targets_ = {a, b};
  g.check_distinct();
  return g;
}

Gate Gate::library(std::string tag, SemanticMapPtr map,
                   std::vector<QubitId> targets, LibraryCost cost) {
  if (!map) throw CircuitError("library gate without a semantic map");
  if (map->arity() != targets.size()) {
    throw CircuitError("library gate '" + tag + "': expected " +
                       std::to_string(map->arity()) + " targets, got " +
                       std::to_string(targets.size()));
  }
  if (cost.depth < 1 || cost.width < 0 || cost.ancillas < 0) {
    throw CircuitError("library gate '" + tag + "': bad declared cost");
  }
  Gate g;
  g.kind_ = GateKind::Library;
  g.label_ = std::move(tag);
  g.map_ = std::move(map);
  g.targets_ = std::move(targets);
  g.cost_ = std::move(cost);
  g.check_distinct();
  return g;
}

std::vector<QubitId> Gate::qubits() const {
  std::vector<QubitId> out = controls_;
  out.insert(out.end(), targets_.begin(), targets_.end());
  return out;
}

int Gate::depth() const { return kind_ == GateKind::Library ? cost_.depth : 1; }

int Gate::fanout_width() const {
  if (kind_ == GateKind::Fanout) return static_cast<int>(targets_.size()) - 1;
  if (kind_ == GateKind::Library) return cost_.width;
  return 0;
}

Gate Gate::inverse() const {
  Gate g = *this;
  if (kind_ == GateKind::Unitary) {
    g.matrix_ = mat::adjoint(matrix_);
    if (!label_.empty() && !mat::is_hermitian(matrix_)) {
      g.label_ = label_.ends_with("_dg") ? label_.substr(0, label_.size() - 3)
                                         : label_ + "_dg";
    }
  } else if (kind_ == GateKind::Library) {
    g.inverted_ = !inverted_;
  }
  return g;
}

Gate Gate::with_controls(const std::vector<QubitId>& extra) const {
  if (extra.empty()) return *this;
  Gate g = *this;
  if (kind_ == GateKind::Unitary) {
    if (!mat::is_hermitian(matrix_)) {
      throw ControlError("cannot control non-Hermitian gate '" + label_ + "'");
    }
    g.kind_ = GateKind::ControlledHermitian;
  }
  g.controls_.insert(g.controls_.end(), extra.begin(), extra.end());
  g.check_distinct();
  return g;
}

Gate Gate::remapped(const std::function<QubitId(QubitId)>& f) const {
  Gate g = *this;
  for (auto& q : g.targets_) q = f(q);
  for (auto& q : g.controls_) q = f(q);
  g.check_distinct();
  return g;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind_ != b.kind_ || a.targets_ != b.targets_ ||
      a.controls_ != b.controls_ || a.label_ != b.label_ ||
      a.widened_ != b.widened_ || a.inverted_ != b.inverted_) {
    return false;
  }
  switch (a.kind_) {
    case GateKind::Unitary:
    case GateKind::ControlledHermitian:
      return a.matrix_ == b.matrix_;
    case GateKind::ProductReflection:
      return a.states_ == b.states_;
    case GateKind::Library:
      if (!(a.cost_ == b.cost_)) return false;
      if (a.map_ == b.map_) return true;
      return semantic_map_to_json(*a.map_) == semantic_map_to_json(*b.map_);
    default:
      return true;
  }
}

}  // namespace symprep

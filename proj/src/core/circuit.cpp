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

#include "symprep/core/circuit.hpp"

#include <algorithm>
#include <set>

namespace symprep {

// ----------------------------------------------------------------- Circuit

Circuit Circuit::create(std::vector<Register> registers, int fanout_budget,
                        CircuitMetadata metadata) {
  if (fanout_budget < 1) throw CircuitError("fanout budget must be positive");
  std::set<QubitId> seen;
  std::set<std::string> names;
  for (const auto& r : registers) {
    if (!names.insert(r.name).second) {
      throw CircuitError("duplicate register name '" + r.name + "'");
    }
    for (const auto& q : r.qubits) {
      if (!seen.insert(q).second) {
        throw CircuitError("qubit " + std::to_string(q.index) +
                           " is in two registers");
      }
    }
  }
  Circuit c;
  c.registers_ = std::move(registers);
  c.fanout_budget_ = fanout_budget;
  c.metadata_ = std::move(metadata);
  return c;
}

int Circuit::widened_cap(int fanout_budget) {
  const int b = std::max(fanout_budget, 2);
  return b * b * b;
}

void Circuit::check_layer(const std::vector<Gate>& layer) const {
  std::set<QubitId> owned;
  for (const auto& r : registers_) owned.insert(r.qubits.begin(), r.qubits.end());
  std::set<QubitId> used;
  for (const auto& g : layer) {
    for (const auto& q : g.qubits()) {
      if (!owned.count(q)) {
        throw CircuitError("gate '" + std::string(to_string(g.kind())) +
                           "' uses qubit " + std::to_string(q.index) +
                           " outside every register");
      }
      if (!used.insert(q).second) {
        throw CircuitError("two gates in one layer share qubit " +
                           std::to_string(q.index));
      }
    }
    if (g.kind() == GateKind::Fanout) {
      const int w = g.fanout_width();
      if (!g.widened() && w > fanout_budget_) {
        throw CircuitError("fanout of width " + std::to_string(w) +
                           " exceeds budget " + std::to_string(fanout_budget_));
      }
      if (g.widened() && w > widened_cap(fanout_budget_)) {
        throw CircuitError("widened fanout of width " + std::to_string(w) +
                           " exceeds cap " +
                           std::to_string(widened_cap(fanout_budget_)));
      }
    }
  }
}

Circuit Circuit::append_layer(std::vector<Gate> gates) const {
  check_layer(gates);
  Circuit c = *this;
  c.layers_.push_back(std::move(gates));
  return c;
}

Circuit Circuit::with_metadata(CircuitMetadata metadata) const {
  Circuit c = *this;
  c.metadata_ = std::move(metadata);
  return c;
}

bool Circuit::has_register(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

const Register& Circuit::reg(std::string_view name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw CircuitError("no register named '" + std::string(name) + "'");
}

std::vector<QubitId> Circuit::qubits() const {
  std::vector<QubitId> out;
  for (const auto& r : registers_) {
    out.insert(out.end(), r.qubits.begin(), r.qubits.end());
  }
  return out;
}

std::size_t Circuit::num_qubits() const {
  std::size_t n = 0;
  for (const auto& r : registers_) n += r.size();
  return n;
}

std::size_t Circuit::gate_count() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n += l.size();
  return n;
}

Circuit Circuit::inverse() const {
  Circuit c = *this;
  c.layers_.clear();
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    std::vector<Gate> layer;
    for (const auto& g : *it) layer.push_back(g.inverse());
    c.layers_.push_back(std::move(layer));
  }
  return c;
}

// ---------------------------------------------------------- CircuitBuilder

CircuitBuilder::CircuitBuilder(int fanout_budget)
    : fanout_budget_(fanout_budget) {
  if (fanout_budget < 1) throw CircuitError("fanout budget must be positive");
}

CircuitBuilder::CircuitBuilder(const Circuit& base)
    : fanout_budget_(base.fanout_budget()),
      registers_(base.registers()),
      metadata_(base.metadata()) {
  for (const auto& r : registers_) {
    for (const auto& q : r.qubits) next_id_ = std::max(next_id_, q.index + 1);
  }
  for (const auto& layer : base.layers()) {
    for (const auto& g : layer) add(g);
  }
}

Register CircuitBuilder::add_register(const std::string& name,
                                      std::size_t size) {
  std::string unique = name;
  for (int i = 2; has_register(unique); ++i) {
    unique = name + "_" + std::to_string(i);
  }
  Register r{unique, {}};
  for (std::size_t i = 0; i < size; ++i) r.qubits.push_back({next_id_++});
  registers_.push_back(r);
  return r;
}

bool CircuitBuilder::has_register(std::string_view name) const {
  return std::any_of(registers_.begin(), registers_.end(),
                     [&](const Register& r) { return r.name == name; });
}

const Register& CircuitBuilder::reg(std::string_view name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return r;
  }
  throw CircuitError("no register named '" + std::string(name) + "'");
}

std::size_t CircuitBuilder::layer_of(const Gate& gate) const {
  std::size_t layer = 0;
  for (const auto& q : gate.qubits()) {
    auto it = next_free_.find(q);
    if (it != next_free_.end()) layer = std::max(layer, it->second);
  }
  return layer;
}

void CircuitBuilder::add(const Gate& gate) {
  const std::size_t l = layer_of(gate);
  if (l == layers_.size()) layers_.emplace_back();
  layers_[l].push_back(gate);
  for (const auto& q : gate.qubits()) next_free_[q] = l + 1;
}

void CircuitBuilder::add_all(const std::vector<Gate>& gates) {
  for (const auto& g : gates) add(g);
}

void CircuitBuilder::append(const Circuit& sub) {
  for (const auto& layer : sub.layers()) {
    for (const auto& g : layer) add(g);
  }
  for (const auto& rec : sub.metadata().amplifications) note_amplification(rec);
  // same qubits: recycled slots are not allocated twice
  metadata_.recycled_ancillas =
      std::max(metadata_.recycled_ancillas, sub.metadata().recycled_ancillas);
}

std::map<std::string, Register> CircuitBuilder::embed(
    const Circuit& sub,
    const std::map<std::string, std::vector<QubitId>>& bindings,
    const std::string& prefix) {
  for (const auto& [name, qs] : bindings) {
    if (!sub.has_register(name)) {
      throw CircuitError("embed: circuit has no register '" + name + "'");
    }
  }
  std::map<QubitId, QubitId> qmap;
  std::map<std::string, Register> image;
  for (const auto& r : sub.registers()) {
    Register target;
    auto it = bindings.find(r.name);
    if (it != bindings.end()) {
      if (it->second.size() != r.size()) {
        throw CircuitError("embed: register '" + r.name + "' has size " +
                           std::to_string(r.size()) + ", binding has " +
                           std::to_string(it->second.size()));
      }
      target = Register{r.name, it->second};
    } else {
      target = add_register(prefix + r.name, r.size());
    }
    for (std::size_t i = 0; i < r.size(); ++i) qmap[r.qubits[i]] = target.qubits[i];
    image[r.name] = target;
  }
  const auto f = [&](QubitId q) { return qmap.at(q); };
  for (const auto& layer : sub.layers()) {
    for (const auto& g : layer) add(g.remapped(f));
  }
  for (const auto& rec : sub.metadata().amplifications) note_amplification(rec);
  metadata_.recycled_ancillas += sub.metadata().recycled_ancillas;
  return image;
}

void CircuitBuilder::note_amplification(AmplificationRecord rec) {
  for (const auto& r : metadata_.amplifications) {
    if (r.label == rec.label) return;
  }
  metadata_.amplifications.push_back(std::move(rec));
}

Circuit CircuitBuilder::build() const {
  Circuit c = Circuit::create(registers_, fanout_budget_, metadata_);
  for (const auto& layer : layers_) c.check_layer(layer);
  c.layers_ = layers_;
  return c;
}

}  // namespace symprep

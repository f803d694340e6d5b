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

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "symprep/core/sparse_state.hpp"

namespace symprep {

/**
 * Exact action of a library gate on its target block. Local bit i of the
 * block index is target i of the gate. Maps are stateless after
 * construction and may be shared between gates.
 */
class SemanticMap {
 public:
  virtual ~SemanticMap() = default;

  virtual std::string_view family() const = 0;
  virtual std::size_t arity() const = 0;

  /** Acts on a block of 2^arity amplitudes in place. */
  virtual void apply(std::span<Complex> block, bool inverse) const = 0;

  /** Family-specific data; together with family() it rebuilds the map. */
  virtual nlohmann::json params() const = 0;
};

using SemanticMapPtr = std::shared_ptr<const SemanticMap>;

/** {"family": ..., "params": ...} */
nlohmann::json semantic_map_to_json(const SemanticMap& map);
SemanticMapPtr semantic_map_from_json(const nlohmann::json& j);

/**
 * Unitary sending |0> to a fixed state. The state may be produced lazily,
 * which lets cost-only builds skip simulation.
 */
class StatePrepMap final : public SemanticMap {
 public:
  StatePrepMap(std::size_t arity, std::function<SparseState()> make);
  explicit StatePrepMap(SparseState state);

  std::string_view family() const override { return "state_prep"; }
  std::size_t arity() const override { return arity_; }
  void apply(std::span<Complex> block, bool inverse) const override;
  nlohmann::json params() const override;

  const SparseState& state() const;

 private:
  void materialize() const;

  std::size_t arity_;
  std::function<SparseState()> make_;
  mutable std::once_flag once_;
  mutable SparseState state_;
  mutable std::unique_ptr<ZeroReflector> reflector_;
};

/**
 * Controls first, then targets. For a control pattern with a branch the
 * targets get the branch's state preparation; other patterns are identity.
 * With the weight-one promise, amplitude on patterns of weight two or more
 * is a domain error.
 */
class ControlledPrepMap final : public SemanticMap {
 public:
  enum class Domain { Any, WeightAtMostOne };
  struct Branch {
    std::uint64_t pattern;
    SparseState state;
  };

  ControlledPrepMap(std::size_t num_controls, std::size_t num_targets,
                    Domain domain, std::function<std::vector<Branch>()> make);
  ControlledPrepMap(std::size_t num_controls, std::size_t num_targets,
                    Domain domain, std::vector<Branch> branches);

  std::string_view family() const override { return "controlled_prep"; }
  std::size_t arity() const override { return controls_ + targets_; }
  void apply(std::span<Complex> block, bool inverse) const override;
  nlohmann::json params() const override;

  const std::vector<Branch>& branches() const;

 private:
  void materialize() const;

  std::size_t controls_;
  std::size_t targets_;
  Domain domain_;
  std::function<std::vector<Branch>()> make_;
  mutable std::once_flag once_;
  mutable std::vector<Branch> branches_;
  mutable std::vector<int> slot_;  // pattern -> branch index or -1
  mutable std::vector<std::unique_ptr<ZeroReflector>> reflectors_;
};

/**
 * Classical reversible map |x>|y> -> |x>|y xor f(x)>. Inputs occupy the low
 * bits. Named functions:
 *   threshold(t): [|x| >= t]
 *   exact(t):     [|x| == t]
 *   ham(k):       e_{min(k+1,|x|)} on k+1 output bits, 0 for x = 0
 *   ladder(k, le|eq): input is a k-bit selector a then x; for a = e_j the
 *                 output is [|x| <= j] or [|x| == j], and 0 for a = 0.
 *                 Selectors of weight two or more are a domain error.
 */
class XorMap final : public SemanticMap {
 public:
  enum class Function { Threshold, Exact, Ham, LadderLe, LadderEq };

  XorMap(Function f, std::size_t num_inputs, int param);

  std::string_view family() const override { return "xor"; }
  std::size_t arity() const override { return inputs_ + outputs_; }
  void apply(std::span<Complex> block, bool inverse) const override;
  nlohmann::json params() const override;

  std::uint64_t evaluate(std::uint64_t x) const;
  bool in_domain(std::uint64_t x) const;
  Function function() const { return f_; }
  int param() const { return param_; }
  std::size_t num_inputs() const { return inputs_; }
  std::size_t num_outputs() const { return outputs_; }

 private:
  Function f_;
  std::size_t inputs_;
  std::size_t outputs_;
  int param_;
};

/**
 * |i>_bin |0^k> <-> |0>_bin |e_i>, i = 1..k; every other basis state is
 * fixed. Binary register of ceil(log2(k+1)) bits comes first.
 */
class OneHotMap final : public SemanticMap {
 public:
  explicit OneHotMap(int k);

  std::string_view family() const override { return "one_hot"; }
  std::size_t arity() const override { return bits_ + k_; }
  void apply(std::span<Complex> block, bool inverse) const override;
  nlohmann::json params() const override;

  static std::size_t binary_width(int k);

 private:
  int k_;
  std::size_t bits_;
};

/**
 * Selector a (t bits), then slots Q_1..Q_t and Q_* of s bits each. For
 * a = e_i swaps Q_i with Q_*; a = 0 is identity; heavier selectors are a
 * domain error.
 */
class WSwapMap final : public SemanticMap {
 public:
  WSwapMap(int t, int s);

  std::string_view family() const override { return "w_swap"; }
  std::size_t arity() const override {
    return static_cast<std::size_t>(t_ + (t_ + 1) * s_);
  }
  void apply(std::span<Complex> block, bool inverse) const override;
  nlohmann::json params() const override;

 private:
  int t_;
  int s_;
};

}  // namespace symprep

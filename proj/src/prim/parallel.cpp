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

#include "symprep/prim/parallel.hpp"

#include <cmath>
#include <map>

#include "symprep/core/library.hpp"
#include "symprep/sim/simulator.hpp"

namespace symprep::prim {

namespace {

void check_base(BuildContext& ctx, const MarkedPreparation& base) {
  if (!ctx.should_simulate(base.circuit.num_qubits())) return;
  const sim::StateVector s = sim::run_from_zero(base.circuit);
  const std::uint64_t f = s.mask_of(base.flags);
  const auto amps = s.amplitudes();
  for (std::uint64_t i = 1; i < amps.size(); ++i) {
    if ((i & f) == 0 && std::norm(amps[i]) > 1e-20) {
      throw PreconditionError(
          "parallel_amplify: unmarked branch is not all zeros");
    }
  }
}

}  // namespace

int parallel_copies(const dist::Rational& alpha) {
  if (alpha <= 0 || alpha > 1) {
    throw PreconditionError("parallel_amplify: alpha outside (0, 1]");
  }
  const dist::Rational inv = 1 / alpha;
  dist::Integer t = numerator(inv) / denominator(inv);
  if (t * denominator(inv) != numerator(inv)) t += 1;
  if (t > 4096) throw PreconditionError("parallel_amplify: too many copies");
  return t.convert_to<int>();
}

Circuit parallel_amplify(BuildContext& ctx, const MarkedPreparation& base,
                         const std::vector<QubitId>& data,
                         const std::string& site) {
  if (base.flags.size() != 1) {
    throw PreconditionError("parallel_amplify: base needs exactly one flag");
  }
  const dist::Rational alpha =
      base.alpha_exact ? *base.alpha_exact : dist::Rational(base.alpha);
  const int t = parallel_copies(alpha);
  check_base(ctx, base);

  CircuitBuilder b(ctx.fanout_budget());
  std::vector<QubitId> flags;
  std::vector<QubitId> slots;
  for (int i = 0; i < t; ++i) {
    const auto image =
        b.embed(base.circuit, {}, "copy" + std::to_string(i + 1) + "_");
    std::map<QubitId, QubitId> to;
    for (const auto& r : base.circuit.registers()) {
      const auto& img = image.at(r.name);
      for (std::size_t j = 0; j < r.size(); ++j) to[r.qubits[j]] = img[j];
    }
    flags.push_back(to.at(base.flags[0]));
    for (const auto& q : data) slots.push_back(to.at(q));
  }
  const Register hit = b.add_register("hit", 1);
  b.add(exact_op(t, 1).on(concat({flags, hit.qubits})));

  // exactly one of t copies is marked
  const dist::Rational p_star =
      alpha * t * dist::pow(1 - alpha, t - 1);
  MarkedPreparation mp{b.build(), {hit[0]}, dist::to_double(p_star), p_star};
  CircuitBuilder o(amplify_to_exact(ctx, mp, site));

  const Register out = o.add_register("out", data.size());
  o.add(w_swap_op(t, static_cast<int>(data.size()))
            .on(concat({flags, slots, out.qubits})));
  o.add(dicke_prep_op(t, 1).on(flags).inverse());
  o.metadata().output_register = "out";
  return o.build();
}

}  // namespace symprep::prim

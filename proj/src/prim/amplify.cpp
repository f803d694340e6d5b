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

#include "symprep/prim/amplify.hpp"

#include <cmath>
#include <numbers>

#include "symprep/core/matrices.hpp"
#include "symprep/sim/simulator.hpp"

namespace symprep::prim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

double checked_alpha(const MarkedPreparation& mp) {
  const double a = mp.alpha_exact ? dist::to_double(*mp.alpha_exact) : mp.alpha;
  if (!(a > 0.0) || a > 1.0 + 1e-12) {
    throw PreconditionError("marked mass must lie in (0, 1], got " +
                            std::to_string(a));
  }
  if (mp.flags.empty()) throw PreconditionError("marked preparation without flag");
  return std::min(a, 1.0);
}

void check_marked(BuildContext& ctx, const MarkedPreparation& mp, double a) {
  if (!ctx.should_simulate(mp.circuit.num_qubits())) return;
  const double got = marked_mass(sim::run_from_zero(mp.circuit), mp.flags);
  if (std::abs(got - a) > 1e-10) {
    throw PreconditionError("marked mass is " + std::to_string(got) +
                            ", declared " + std::to_string(a));
  }
}

Gate flag_phase(const std::vector<QubitId>& flags) {
  if (flags.size() == 1) return Gate::unitary(flags[0], mat::pauli_z(), "z");
  std::vector<QubitId> ctl(flags.begin(), flags.end() - 1);
  return Gate::controlled_hermitian(ctl, flags.back(), mat::pauli_z(), "z");
}

void add_rounds(CircuitBuilder& b, const Circuit& c,
                const std::vector<QubitId>& flags, int rounds) {
  const Circuit inv = c.inverse();
  for (int i = 0; i < rounds; ++i) {
    b.add(flag_phase(flags));
    b.append(inv);
    b.add(Gate::zero_reflection(c.qubits()));
    b.append(c);
  }
}

AmplificationRecord record(const std::string& label, const MarkedPreparation& mp,
                           double a, int rounds, bool forced) {
  AmplificationRecord r;
  r.label = label;
  r.alpha = a;
  if (mp.alpha_exact) r.alpha_exact = dist::to_string(*mp.alpha_exact);
  r.rounds = rounds;
  r.forced = forced;
  return r;
}

}  // namespace

int odd_period(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0 + 1e-12) {
    throw PreconditionError("odd_period: alpha outside (0, 1]");
  }
  const double theta = std::asin(std::sqrt(std::min(alpha, 1.0)));
  int r = 1;
  while (kPi / (2.0 * r) > theta + kAngleTol) r += 2;
  return r;
}

Circuit exact_grover(BuildContext& ctx, const MarkedPreparation& mp,
                     const std::string& site) {
  const double a = checked_alpha(mp);
  const double theta = std::asin(std::sqrt(a));
  const int r = odd_period(a);
  if (std::abs(kPi / (2.0 * r) - theta) > kAngleTol) {
    throw PreconditionError(
        "marked mass " + std::to_string(a) +
        " is not sin^2(pi/(2r)) for odd r; use amplify_to_exact");
  }
  check_marked(ctx, mp, a);
  const int rounds = (r - 1) / 2;
  CircuitBuilder b(mp.circuit);
  add_rounds(b, mp.circuit, mp.flags, rounds);
  b.note_amplification(record(ctx.label(site), mp, a, rounds, false));
  return b.build();
}

Circuit amplify_to_exact(BuildContext& ctx, const MarkedPreparation& mp,
                         const std::string& site) {
  const double a = checked_alpha(mp);
  check_marked(ctx, mp, a);
  const std::string label = ctx.label(site);
  int r = odd_period(a);
  bool forced = false;
  if (auto f = ctx.forced_rounds(label)) {
    r = 2 * *f + 1;
    forced = true;
  }
  const double target = std::pow(std::sin(kPi / (2.0 * r)), 2);
  // a forced count can ask for more mass than there is; cost-only builds
  // accept that and clamp
  const double rho = std::clamp(target / a, 0.0, 1.0);

  CircuitBuilder b(mp.circuit);
  const Register amp = b.add_register("amp", 1);
  // always present, even when rho = 1, so the gate structure does not
  // depend on alpha
  b.add(Gate::controlled_hermitian(mp.flags, amp[0],
                                   mat::rot(std::clamp(1.0 - rho, 0.0, 1.0)),
                                   "amp_rot"));
  const Circuit c = b.build();
  std::vector<QubitId> flags = mp.flags;
  flags.push_back(amp[0]);

  CircuitBuilder g(c);
  const int rounds = (r - 1) / 2;
  add_rounds(g, c, flags, rounds);
  for (const auto& q : flags) g.add(Gate::unitary(q, mat::pauli_x(), "x"));
  g.note_amplification(record(label, mp, a, rounds, forced));
  return g.build();
}

}  // namespace symprep::prim

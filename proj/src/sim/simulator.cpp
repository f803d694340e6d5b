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

#include "symprep/sim/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

namespace symprep::sim {

namespace {

constexpr std::size_t kChunk = std::size_t{1} << 12;
constexpr std::uint64_t kParallelMin = std::uint64_t{1} << 14;
constexpr double kNormTol = 1e-10;

std::atomic<int> g_worker_override{0};

/** Spreads the low bits of j over the set bits of mask. */
std::uint64_t deposit(std::uint64_t j, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    if (j & 1) out |= m & (~m + 1);
    j >>= 1;
  }
  return out;
}

/**
 * Calls fn(x) for every x below 2^n whose bits outside `free` equal
 * `fixed`. Disjoint work per call, so threads never race.
 */
template <class Fn>
void for_each_index(std::size_t n, std::uint64_t free, std::uint64_t fixed,
                    Fn&& fn) {
  const std::uint64_t all = n >= 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1;
  free &= all;
  const std::uint64_t count = std::uint64_t{1} << std::popcount(free);
  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t y = deposit(begin, free);
    for (std::uint64_t j = begin; j < end; ++j) {
      fn(y | fixed);
      y = ((y | ~free) + 1) & free;
    }
  };
  const int workers = worker_count();
  if (workers <= 1 || count < kParallelMin) {
    run(0, count);
    return;
  }
  const auto w = static_cast<std::uint64_t>(workers);
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(w);
  for (std::uint64_t t = 0; t < w; ++t) {
    const std::uint64_t b = count * t / w;
    const std::uint64_t e = count * (t + 1) / w;
    threads.emplace_back([&, b, e, t] {
      try {
        run(b, e);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

std::vector<std::uint64_t> offsets(const StateVector& s,
                                   const std::vector<QubitId>& qubits) {
  std::vector<std::uint64_t> bits;
  for (const auto& q : qubits) bits.push_back(s.mask_of({q}));
  std::vector<std::uint64_t> off(std::size_t{1} << bits.size());
  for (std::size_t x = 0; x < off.size(); ++x) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < bits.size(); ++b) {
      if ((x >> b) & 1) v |= bits[b];
    }
    off[x] = v;
  }
  return off;
}

void apply_matrix(StateVector& s, const Gate& g) {
  const std::uint64_t t = s.mask_of(g.targets());
  const std::uint64_t c = s.mask_of(g.controls());
  const std::uint64_t all = (std::uint64_t{1} << s.num_qubits()) - 1;
  const Matrix2& m = g.matrix();
  auto amps = s.amplitudes();
  for_each_index(s.num_qubits(), all & ~t & ~c, c, [&](std::uint64_t i) {
    const Complex a0 = amps[i];
    const Complex a1 = amps[i | t];
    amps[i] = m[0] * a0 + m[1] * a1;
    amps[i | t] = m[2] * a0 + m[3] * a1;
  });
}

void apply_reflection(StateVector& s, const Gate& g) {
  const auto off = offsets(s, g.targets());
  // support of the product state
  std::vector<std::pair<std::uint64_t, Complex>> w;
  const auto& st = g.states();
  for (std::size_t x = 0; x < off.size(); ++x) {
    Complex v = 1.0;
    for (std::size_t b = 0; b < st.size(); ++b) v *= st[b][(x >> b) & 1];
    if (std::abs(v) > 0.0) w.emplace_back(off[x], v);
  }
  const std::uint64_t t = s.mask_of(g.targets());
  const std::uint64_t c = s.mask_of(g.controls());
  const std::uint64_t all = (std::uint64_t{1} << s.num_qubits()) - 1;
  auto amps = s.amplitudes();
  for_each_index(s.num_qubits(), all & ~t & ~c, c, [&](std::uint64_t base) {
    Complex ov{};
    for (const auto& [o, v] : w) ov += std::conj(v) * amps[base | o];
    if (ov == Complex{}) return;
    for (const auto& [o, v] : w) amps[base | o] -= 2.0 * v * ov;
  });
}

void apply_boolean(StateVector& s, const Gate& g) {
  const auto& tg = g.targets();
  const std::vector<QubitId> inputs(tg.begin(), tg.end() - 1);
  const std::uint64_t in = s.mask_of(inputs);
  const std::uint64_t out = s.mask_of({tg.back()});
  const std::uint64_t c = s.mask_of(g.controls());
  const std::uint64_t all = (std::uint64_t{1} << s.num_qubits()) - 1;
  const GateKind kind = g.kind();
  auto amps = s.amplitudes();
  for_each_index(s.num_qubits(), all & ~out & ~c, c, [&](std::uint64_t i) {
    const std::uint64_t x = i & in;
    bool fire = false;
    if (kind == GateKind::And) fire = x == in;
    if (kind == GateKind::Or) fire = x != 0;
    if (kind == GateKind::Nor) fire = x == 0;
    if (fire) std::swap(amps[i], amps[i | out]);
  });
}

void apply_fanout(StateVector& s, const Gate& g) {
  const auto& tg = g.targets();
  const std::uint64_t src = s.mask_of({tg.front()});
  const std::uint64_t copies =
      s.mask_of(std::vector<QubitId>(tg.begin() + 1, tg.end()));
  const std::uint64_t low = copies & (~copies + 1);
  const std::uint64_t c = s.mask_of(g.controls());
  const std::uint64_t all = (std::uint64_t{1} << s.num_qubits()) - 1;
  auto amps = s.amplitudes();
  for_each_index(s.num_qubits(), all & ~src & ~c & ~low, src | c,
                 [&](std::uint64_t i) { std::swap(amps[i], amps[i ^ copies]); });
}

void apply_swap(StateVector& s, const Gate& g) {
  const std::uint64_t a = s.mask_of({g.targets()[0]});
  const std::uint64_t b = s.mask_of({g.targets()[1]});
  const std::uint64_t c = s.mask_of(g.controls());
  const std::uint64_t all = (std::uint64_t{1} << s.num_qubits()) - 1;
  auto amps = s.amplitudes();
  for_each_index(s.num_qubits(), all & ~a & ~b & ~c, a | c,
                 [&](std::uint64_t i) { std::swap(amps[i], amps[i ^ a ^ b]); });
}

void apply_library(StateVector& s, const Gate& g) {
  const auto off = offsets(s, g.targets());
  const std::uint64_t t = s.mask_of(g.targets());
  const std::uint64_t c = s.mask_of(g.controls());
  const std::uint64_t all = (std::uint64_t{1} << s.num_qubits()) - 1;
  const auto& map = *g.map();
  const bool inv = g.inverted();
  auto amps = s.amplitudes();
  auto body = [&](std::uint64_t base) {
    std::vector<Complex> block(off.size());
    double before = 0.0;
    for (std::size_t x = 0; x < off.size(); ++x) {
      block[x] = amps[base | off[x]];
      before += std::norm(block[x]);
    }
    if (before == 0.0) return;
    map.apply(block, inv);
    double after = 0.0;
    for (std::size_t x = 0; x < off.size(); ++x) {
      amps[base | off[x]] = block[x];
      after += std::norm(block[x]);
    }
    if (std::abs(after - before) > kNormTol * std::max(1.0, before)) {
      throw SimulationError("library gate '" + g.label() +
                            "' changed the norm of a block");
    }
  };
  for_each_index(s.num_qubits(), all & ~t & ~c, c, body);
}

}  // namespace

int worker_count() {
  const int o = g_worker_override.load();
  if (o > 0) return o;
  if (const char* env = std::getenv("SYMPREP_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  return 1;
}

void set_worker_count(int workers) { g_worker_override.store(std::max(0, workers)); }

double norm_squared(std::span<const Complex> amps) {
  std::vector<double> partial((amps.size() + kChunk - 1) / kChunk);
  for (std::size_t ch = 0; ch < partial.size(); ++ch) {
    double acc = 0.0;
    const std::size_t end = std::min(amps.size(), (ch + 1) * kChunk);
    for (std::size_t i = ch * kChunk; i < end; ++i) acc += std::norm(amps[i]);
    partial[ch] = acc;
  }
  double sum = 0.0;
  for (double p : partial) sum += p;
  return sum;
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw SimulationError("inner product: size mismatch");
  std::vector<Complex> partial((a.size() + kChunk - 1) / kChunk);
  for (std::size_t ch = 0; ch < partial.size(); ++ch) {
    Complex acc{};
    const std::size_t end = std::min(a.size(), (ch + 1) * kChunk);
    for (std::size_t i = ch * kChunk; i < end; ++i) acc += std::conj(a[i]) * b[i];
    partial[ch] = acc;
  }
  Complex sum{};
  for (const auto& p : partial) sum += p;
  return sum;
}

void apply_in_place(StateVector& state, const Gate& gate) {
  switch (gate.kind()) {
    case GateKind::Unitary:
    case GateKind::ControlledHermitian:
      apply_matrix(state, gate);
      break;
    case GateKind::ProductReflection:
      apply_reflection(state, gate);
      break;
    case GateKind::And:
    case GateKind::Or:
    case GateKind::Nor:
      apply_boolean(state, gate);
      break;
    case GateKind::Fanout:
      apply_fanout(state, gate);
      break;
    case GateKind::Swap:
      apply_swap(state, gate);
      break;
    case GateKind::Library:
      apply_library(state, gate);
      break;
  }
}

StateVector apply(StateVector state, const Gate& gate) {
  apply_in_place(state, gate);
  return state;
}

StateVector run(const Circuit& circuit, StateVector input) {
  for (const auto& q : circuit.qubits()) {
    if (input.position(q) < 0) {
      throw SimulationError("input state does not cover qubit " +
                            std::to_string(q.index));
    }
  }
  const double start = norm_squared(input.amplitudes());
  for (std::size_t li = 0; li < circuit.layers().size(); ++li) {
    for (const auto& g : circuit.layers()[li]) apply_in_place(input, g);
    const double now = norm_squared(input.amplitudes());
    if (std::abs(now - start) > kNormTol * std::max(1.0, start)) {
      throw SimulationError("norm drifted after layer " + std::to_string(li));
    }
  }
  return input;
}

StateVector run_from_zero(const Circuit& circuit) {
  return run(circuit, StateVector::zero(circuit.qubits()));
}

double fidelity(const StateVector& s, const StateVector& t) {
  const StateVector aligned =
      s.qubit_order() == t.qubit_order() ? t : t.reordered(s.qubit_order());
  return std::norm(inner_product(s.amplitudes(), aligned.amplitudes()));
}

VerificationResult check_clean_preparation(
    const Circuit& circuit, const std::vector<QubitId>& target_qubits,
    const SparseState& target, double tol) {
  if (target.num_qubits() != target_qubits.size()) {
    throw SimulationError("target width differs from target register");
  }
  const StateVector out = run_from_zero(circuit);
  std::vector<std::uint64_t> pos;
  for (const auto& q : target_qubits) pos.push_back(out.mask_of({q}));
  auto spread = [&](std::uint64_t x) {
    std::uint64_t v = 0;
    for (std::size_t b = 0; b < pos.size(); ++b) {
      if ((x >> b) & 1) v |= pos[b];
    }
    return v;
  };
  Complex ov{};
  for (const auto& [x, a] : target.entries()) {
    ov += std::conj(a) * out.amplitude(spread(x));
  }
  const auto amps = out.amplitudes();
  double clean_mass = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << target_qubits.size()); ++x) {
    clean_mass += std::norm(amps[spread(x)]);
  }
  VerificationResult r;
  r.fidelity = std::norm(ov);
  r.residual_ancilla_mass = std::max(0.0, 1.0 - clean_mass);
  r.clean = r.residual_ancilla_mass < tol;
  return r;
}

}  // namespace symprep::sim

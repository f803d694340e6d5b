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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "symprep/core/library.hpp"
#include "symprep/core/matrices.hpp"
#include "symprep/prim/onehot.hpp"
#include "symprep/prim/hamming.hpp"
#include "symprep/sim/certify.hpp"

namespace symprep::sim {
namespace {

std::vector<QubitId> ids(std::uint32_t n, std::uint32_t from = 0) {
  std::vector<QubitId> out;
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(QubitId{from + i});
  return out;
}

TEST(Apply, XFlips) {
  const auto s = apply(StateVector::zero(ids(1)),
                       Gate::unitary(QubitId{0}, mat::pauli_x()));
  EXPECT_NEAR(std::abs(s.amplitude(1)), 1.0, 1e-15);
}

TEST(Apply, FanoutCopiesOne) {
  const auto s = apply(StateVector::basis(ids(3), 0b001),
                       Gate::fanout(QubitId{0}, {QubitId{1}, QubitId{2}}));
  EXPECT_NEAR(std::abs(s.amplitude(0b111)), 1.0, 1e-15);
}

TEST(Apply, RotQuarter) {
  const auto s = apply(StateVector::zero(ids(1)),
                       Gate::unitary(QubitId{0}, mat::rot(0.25)));
  EXPECT_NEAR(s.amplitude(0).real(), 0.5, 1e-15);
  EXPECT_NEAR(s.amplitude(1).real(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(Apply, UnknownQubit) {
  EXPECT_THROW(apply(StateVector::zero(ids(1)),
                     Gate::unitary(QubitId{5}, mat::pauli_x())),
               SimulationError);
}

TEST(Apply, ControlledLibraryGate) {
  // W_2 under a control
  const Gate g = dicke_prep_op(2, 1).on({QubitId{1}, QubitId{2}}).with_controls({QubitId{0}});
  const auto off = apply(StateVector::zero(ids(3)), g);
  EXPECT_NEAR(std::abs(off.amplitude(0)), 1.0, 1e-15);
  const auto on = apply(StateVector::basis(ids(3), 1), g);
  EXPECT_NEAR(std::norm(on.amplitude(0b011)), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(on.amplitude(0b101)), 0.5, 1e-15);
}

TEST(Run, EmptyIsIdentity) {
  CircuitBuilder b(2);
  b.add_register("q", 2);
  const Circuit c = b.build();
  const auto in = StateVector::basis(c.qubits(), 2);
  EXPECT_EQ(run(c, in).to_sparse().entries(), in.to_sparse().entries());
}

TEST(Run, TwoHadamards) {
  CircuitBuilder b(2);
  const Register q = b.add_register("q", 1);
  b.add(Gate::unitary(q[0], mat::hadamard()));
  b.add(Gate::unitary(q[0], mat::hadamard()));
  const auto s = run_from_zero(b.build());
  EXPECT_NEAR(std::abs(s.amplitude(0)), 1.0, 1e-12);
}

TEST(Run, Toffoli) {
  CircuitBuilder b(2);
  const Register q = b.add_register("q", 3);
  b.add(Gate::and_gate({q[0], q[1]}, q[2]));
  const auto s = run(b.build(), StateVector::basis(q.qubits, 0b011));
  EXPECT_NEAR(std::abs(s.amplitude(0b111)), 1.0, 1e-15);
}

TEST(Run, InputMustCoverCircuit) {
  CircuitBuilder b(2);
  const Register q = b.add_register("q", 2);
  b.add(Gate::cnot(q[0], q[1]));
  EXPECT_THROW(run(b.build(), StateVector::zero({q[0]})), SimulationError);
}

TEST(Fidelity, Basics) {
  const auto z = StateVector::zero(ids(1));
  const auto o = StateVector::basis(ids(1), 1);
  EXPECT_NEAR(fidelity(z, z), 1.0, 1e-15);
  EXPECT_NEAR(fidelity(z, o), 0.0, 1e-15);
  // |eps> = sqrt(1 - eps)|0> + sqrt(eps)|1>
  const auto e = StateVector::from_sparse(
      ids(1), SparseState(1, {{0, std::sqrt(0.7)}, {1, std::sqrt(0.3)}}));
  EXPECT_NEAR(fidelity(e, z), 0.7, 1e-12);
}

TEST(Fidelity, ReorderInvariant) {
  const auto s = StateVector::from_sparse(
      ids(2), SparseState(2, {{0b01, 0.6}, {0b11, 0.8}}));
  const auto t = s.reordered({QubitId{1}, QubitId{0}});
  EXPECT_NEAR(fidelity(s, t), 1.0, 1e-15);
  EXPECT_THROW(fidelity(s, StateVector::zero(ids(2, 5))), SimulationError);
}

TEST(CleanPreparation, DickeOracle) {
  CircuitBuilder b(2);
  const Register t = b.add_register("T", 4);
  b.add(dicke_prep_op(4, 2).on(t.qubits));
  const auto r = check_clean_preparation(b.build(), t.qubits, dicke_state(4, 2));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
  EXPECT_TRUE(r.clean);
}

TEST(CleanPreparation, DirtyAncilla) {
  CircuitBuilder b(2);
  const Register t = b.add_register("T", 1);
  const Register a = b.add_register("a", 1);
  b.add(Gate::unitary(a[0], mat::pauli_x()));
  const auto r = check_clean_preparation(b.build(), t.qubits,
                                         SparseState::basis(1, 0));
  EXPECT_FALSE(r.clean);
  EXPECT_NEAR(r.fidelity, 0.0, 1e-15);
}

TEST(Determinism, WorkerCountDoesNotChangeBits) {
  CircuitBuilder b(2);
  const Register q = b.add_register("q", 16);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> g(0.0, 1.0);
  for (int rep = 0; rep < 3; ++rep) {
    for (const auto& x : q.qubits) b.add(Gate::unitary(x, mat::rot(g(rng))));
    for (std::size_t i = 0; i + 1 < q.size(); i += 2) b.add(Gate::cnot(q[i], q[i + 1]));
    b.add(Gate::zero_reflection(q.qubits));
  }
  const Circuit c = b.build();
  set_worker_count(1);
  const auto one = run_from_zero(c);
  set_worker_count(4);
  const auto four = run_from_zero(c);
  set_worker_count(0);
  ASSERT_EQ(one.amplitudes().size(), four.amplitudes().size());
  for (std::size_t i = 0; i < one.amplitudes().size(); ++i) {
    ASSERT_EQ(one.amplitudes()[i], four.amplitudes()[i]) << i;
  }
  EXPECT_NEAR(one.norm(), 1.0, 1e-10);
}

TEST(Reflection, PreparedStateReflection) {
  // U prepares |psi> on 2 data qubits using 1 ancilla; U R_0 U^dag = R_psi
  CircuitBuilder b(2);
  const Register d = b.add_register("d", 2);
  const Register a = b.add_register("a", 1);
  b.add(Gate::unitary(d[0], mat::rot(0.3)));
  b.add(Gate::unitary(d[1], mat::hadamard()).with_controls({d[0]}));
  b.add(Gate::cnot(d[1], a[0]));
  b.add(Gate::cnot(d[1], a[0]));
  const Circuit u = b.build();
  const auto psi = run_from_zero(u).restricted(d.qubits);
  CircuitBuilder r(u.inverse());
  r.add(Gate::zero_reflection(u.qubits()));
  r.append(u);
  const Circuit refl = r.build();

  std::mt19937 rng(17);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    std::vector<Complex> v(4);
    double n = 0;
    for (auto& x : v) {
      x = {g(rng), g(rng)};
      n += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(n);
    const auto in = StateVector(d.qubits, v).padded(a.qubits);
    const auto out = run(refl, in).restricted(d.qubits);
    Complex ov{};
    for (std::size_t i = 0; i < 4; ++i) ov += std::conj(psi.amplitude(i)) * v[i];
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex want = v[i] - 2.0 * ov * psi.amplitude(i);
      EXPECT_NEAR(std::abs(out.amplitude(i) - want), 0.0, 1e-9);
    }
  }
}

TEST(Certify, HamGadgetThreeOne) {
  prim::BuildContext ctx;
  const Circuit c = prim::ham_gadget(ctx, 3, 1);
  // x, out (k+1) and one copy of x for the second rung
  EXPECT_EQ(c.num_qubits(), 8u);
  const auto iface = prim::qubits_of(c, {"x", "out"});
  const auto op = XorMap(XorMap::Function::Ham, 3, 1);
  const Gate g = Gate::library("ham", std::make_shared<XorMap>(op), iface, {});
  const auto res = certify_library_gate(
      c, g, basis_cases(iface.size(), [](std::uint64_t x) { return x < 8; }));
  EXPECT_TRUE(res.passed) << res.failure;
  // eight basis inputs plus their superposition
  EXPECT_EQ(res.cases, 9u);
}

TEST(Certify, ZeroW) {
  prim::BuildContext ctx;
  const Circuit c = prim::build_zero_w(ctx, 3);
  const auto r = check_clean_preparation(
      c, c.reg("x").qubits,
      SparseState(3, {{0, std::sqrt(0.5)},
                      {1, 1 / std::sqrt(6.0)},
                      {2, 1 / std::sqrt(6.0)},
                      {4, 1 / std::sqrt(6.0)}}));
  EXPECT_NEAR(r.fidelity, 1.0, 1e-12);
}

TEST(Certify, CorruptedBuilderFails) {
  prim::BuildContext ctx;
  CircuitBuilder b(prim::ham_gadget(ctx, 3, 1));
  b.add(Gate::unitary(b.reg("out")[0], mat::pauli_x()));
  const Circuit c = b.build();
  const auto iface = prim::qubits_of(c, {"x", "out"});
  const Gate g = Gate::library(
      "ham", std::make_shared<XorMap>(XorMap::Function::Ham, 3, 1), iface, {});
  const auto res = certify_library_gate(
      c, g, basis_cases(iface.size(), [](std::uint64_t x) { return x < 8; }));
  EXPECT_FALSE(res.passed);
  EXPECT_FALSE(res.failure.empty());
}

TEST(Dump, RowsAboveThreshold) {
  const auto s = StateVector::from_sparse(
      ids(2), SparseState(2, {{0b10, 0.6}, {0b01, Complex(0.0, 0.8)}}));
  const std::string d = dump_state(s);
  EXPECT_NE(d.find("10 "), std::string::npos);
  EXPECT_NE(d.find("01 "), std::string::npos);
}

}  // namespace
}  // namespace symprep::sim

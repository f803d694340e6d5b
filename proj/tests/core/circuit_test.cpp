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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "symprep/core/cost.hpp"
#include "symprep/core/library.hpp"
#include "symprep/core/matrices.hpp"
#include "symprep/core/serialize.hpp"

namespace symprep {
namespace {

std::vector<QubitId> ids(std::initializer_list<std::uint32_t> xs) {
  std::vector<QubitId> out;
  for (auto x : xs) out.push_back(QubitId{x});
  return out;
}

TEST(NewCircuit, EmptyFourQubits) {
  const Circuit c = Circuit::create({{"T", ids({0, 1, 2, 3})}}, 2);
  EXPECT_EQ(c.num_qubits(), 4u);
  EXPECT_TRUE(c.layers().empty());
}

TEST(NewCircuit, OverlappingRegistersRejected) {
  EXPECT_THROW(
      Circuit::create({{"T", ids({0, 1, 2, 3})}, {"U", ids({0, 4})}}, 2),
      CircuitError);
}

TEST(NewCircuit, ThreeRegisters) {
  CircuitBuilder b(2);
  b.add_register("T", 8);
  b.add_register("A", 2);
  b.add_register("B", 4);
  const Circuit c = b.build();
  EXPECT_EQ(c.num_qubits(), 14u);
  EXPECT_EQ(c.layers().size(), 0u);
}

TEST(AppendLayer, DisjointCnotsShareALayer) {
  const Circuit c = Circuit::create({{"q", ids({0, 1, 2, 3})}}, 2);
  const Circuit d = c.append_layer(
      {Gate::cnot(QubitId{0}, QubitId{1}), Gate::cnot(QubitId{2}, QubitId{3})});
  EXPECT_EQ(d.layers().size(), 1u);
  EXPECT_EQ(cost(d).depth, 1);
  EXPECT_TRUE(c.layers().empty());
}

TEST(AppendLayer, SharedQubitRejected) {
  const Circuit c = Circuit::create({{"q", ids({0, 1, 2, 3})}}, 2);
  EXPECT_THROW(c.append_layer({Gate::cnot(QubitId{3}, QubitId{1}),
                               Gate::cnot(QubitId{2}, QubitId{3})}),
               CircuitError);
}

TEST(AppendLayer, UnknownQubitRejected) {
  const Circuit c = Circuit::create({{"q", ids({0, 1})}}, 2);
  EXPECT_THROW(c.append_layer({Gate::cnot(QubitId{0}, QubitId{7})}),
               CircuitError);
}

TEST(AppendLayer, FanoutOverBudget) {
  const Circuit c = Circuit::create({{"q", ids({0, 1, 2, 3, 4, 5})}}, 2);
  EXPECT_THROW(c.append_layer({Gate::fanout(QubitId{0}, ids({1, 2, 3, 4, 5}))}),
               CircuitError);
  const Circuit w = c.append_layer(
      {Gate::fanout(QubitId{0}, ids({1, 2, 3, 4, 5}), true)});
  EXPECT_EQ(cost(w).max_fanout_width, 5);
}

TEST(Cost, EmptyAndSingleFanout) {
  const Circuit c = Circuit::create({{"q", ids({0, 1, 2})}}, 2);
  EXPECT_EQ(cost(c).depth, 0);
  EXPECT_EQ(cost(c).max_fanout_width, 0);
  const Circuit d = c.append_layer({Gate::fanout(QubitId{0}, ids({1, 2}))});
  EXPECT_EQ(cost(d).depth, 1);
  EXPECT_EQ(cost(d).max_fanout_width, 2);
}

TEST(Cost, LibraryDepthCounts) {
  CircuitBuilder b(2);
  const Register x = b.add_register("x", 4);
  b.add(dicke_prep_op(4, 2).on(x.qubits));
  b.add(Gate::unitary(x[0], mat::hadamard()));
  const CostReport r = cost(b.build());
  EXPECT_EQ(r.layers, 2);
  EXPECT_EQ(r.depth, cost_table::kDickePrepDepth + 1);
  EXPECT_GE(r.depth, r.layers);
}

TEST(Builder, PacksIntoEarliestLayer) {
  CircuitBuilder b(2);
  const Register q = b.add_register("q", 3);
  b.add(Gate::unitary(q[0], mat::hadamard()));
  b.add(Gate::unitary(q[1], mat::hadamard()));
  b.add(Gate::cnot(q[0], q[2]));
  const Circuit c = b.build();
  ASSERT_EQ(c.layers().size(), 2u);
  EXPECT_EQ(c.layers()[0].size(), 2u);
}

TEST(Builder, EmbedRenamesFreshRegisters) {
  CircuitBuilder inner(2);
  const Register a = inner.add_register("a", 2);
  inner.add(Gate::cnot(a[0], a[1]));
  const Circuit sub = inner.build();
  CircuitBuilder b(2);
  const Register t = b.add_register("t", 2);
  b.embed(sub, {{"a", t.qubits}}, "x_");
  const auto img = b.embed(sub, {}, "y_");
  const Circuit c = b.build();
  EXPECT_TRUE(c.has_register("y_a"));
  EXPECT_EQ(img.at("a").qubits, c.reg("y_a").qubits);
  EXPECT_EQ(c.num_qubits(), 4u);
}

TEST(Builder, DuplicateAmplificationLabelKeptOnce) {
  CircuitBuilder b(2);
  b.note_amplification({"site", 0.25, "1/4", 1, false});
  b.note_amplification({"site", 0.25, "1/4", 1, false});
  EXPECT_EQ(b.build().metadata().amplifications.size(), 1u);
}

TEST(Circuit, InverseUndoesOrder) {
  CircuitBuilder b(2);
  const Register q = b.add_register("q", 2);
  b.add(Gate::unitary(q[0], mat::phase(0.4)));
  b.add(Gate::cnot(q[0], q[1]));
  const Circuit c = b.build();
  const Circuit inv = c.inverse();
  ASSERT_EQ(inv.layers().size(), 2u);
  EXPECT_EQ(inv.layers()[0][0].kind(), GateKind::And);
  EXPECT_NEAR(mat::distance(inv.layers()[1][0].matrix(), mat::phase(-0.4)), 0.0,
              1e-15);
}

TEST(Matrices, RotConvention) {
  for (int i = 0; i < 100; ++i) {
    const double g = i / 99.0;
    const Matrix2 r = mat::rot(g);
    EXPECT_NEAR(std::abs(r[0] - std::sqrt(g)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r[1] - std::sqrt(1 - g)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r[2] - std::sqrt(1 - g)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(r[3] + std::sqrt(g)), 0.0, 1e-15);
    EXPECT_TRUE(mat::is_hermitian(r));
    EXPECT_TRUE(mat::is_unitary(r));
  }
}

TEST(Matrices, FlippedRotSendsOneToBeta) {
  const Matrix2 f = mat::flipped_rot(0.3);
  EXPECT_NEAR(f[1].real(), std::sqrt(0.7), 1e-15);
  EXPECT_NEAR(f[3].real(), std::sqrt(0.3), 1e-15);
  EXPECT_TRUE(mat::is_hermitian(f));
}

TEST(Gate, ControlledNonHermitianRejected) {
  const Gate g = Gate::unitary(QubitId{0}, mat::phase(0.5));
  EXPECT_THROW(g.with_controls({QubitId{1}}), ControlError);
  EXPECT_THROW(Gate::controlled_hermitian({QubitId{1}}, QubitId{0},
                                          mat::phase(0.5)),
               ControlError);
  const Gate h = Gate::unitary(QubitId{0}, mat::hadamard()).with_controls({QubitId{1}});
  EXPECT_EQ(h.kind(), GateKind::ControlledHermitian);
}

// random circuit over every serializable gate kind
Circuit random_circuit(std::mt19937& rng) {
  CircuitBuilder b(3);
  const Register q = b.add_register("q", 6);
  const Register r = b.add_register("r", 3);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_real_distribution<double> angle(0.0, 3.0);
  auto pick = [&](int n) {
    std::vector<QubitId> all = concat({q.qubits, r.qubits});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(n));
    return all;
  };
  for (int i = 0; i < 25; ++i) {
    auto s = pick(4);
    switch (kind(rng)) {
      case 0: b.add(Gate::unitary(s[0], mat::phase(angle(rng)), "p")); break;
      case 1: b.add(Gate::unitary(s[0], mat::rot(angle(rng) / 3)).with_controls({s[1]})); break;
      case 2: b.add(Gate::and_gate({s[0], s[1]}, s[2])); break;
      case 3: b.add(Gate::or_gate({s[0], s[1], s[2]}, s[3])); break;
      case 4: b.add(Gate::nor_gate({s[0]}, s[1])); break;
      case 5: b.add(Gate::fanout(s[0], {s[1], s[2], s[3]})); break;
      case 6: b.add(Gate::swap(s[0], s[1])); break;
      case 7: b.add(Gate::zero_reflection({s[0], s[1], s[2]})); break;
      case 8: b.add(exact_op(3, 1).on(s).inverse()); break;
      default: b.add(dicke_prep_op(3, 2).on({s[0], s[1], s[2]})); break;
    }
  }
  b.metadata().n = 6;
  b.metadata().k = 2;
  b.metadata().amplifications.push_back({"a/b", 0.25, "1/4", 1, true});
  return b.build();
}

TEST(Serialize, RandomRoundTrips) {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    const Circuit c = random_circuit(rng);
    const Circuit d = deserialize(serialize(c));
    EXPECT_EQ(serialize(d), serialize(c));
    ASSERT_EQ(d.layers().size(), c.layers().size());
    for (std::size_t i = 0; i < c.layers().size(); ++i) {
      EXPECT_EQ(d.layers()[i], c.layers()[i]) << "layer " << i;
    }
    EXPECT_EQ(d.metadata(), c.metadata());
  }
}

TEST(Serialize, TruncatedInputFails) {
  std::mt19937 rng(3);
  const std::string text = serialize(random_circuit(rng));
  EXPECT_THROW(deserialize(text.substr(0, text.size() / 2)), ParseError);
}

TEST(Serialize, UnknownKindNamed) {
  CircuitBuilder b(2);
  const Register q = b.add_register("q", 2);
  b.add(Gate::cnot(q[0], q[1]));
  auto j = circuit_to_json(b.build());
  j["layers"][0][0]["kind"] = "teleport";
  try {
    circuit_from_json(j);
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("teleport"), std::string::npos);
  }
}

}  // namespace
}  // namespace symprep

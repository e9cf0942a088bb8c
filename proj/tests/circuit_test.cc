// Copyright 2026 The onegate Authors.
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

#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "onegate/circuit.h"
#include "onegate/errors.h"
#include "onegate/gadget.h"
#include "test_util.h"

namespace onegate {
namespace {

// One Fredkin instance with every pin exposed.
Circuit fredkin_circuit() {
  Circuit c("fredkin");
  const Pin x = c.add_input("x"), y = c.add_input("y"), z = c.add_input("z");
  const NodeId g = c.add_gate(testing::fredkin(), {x, y, z});
  c.add_output("xo", Pin{g, 0});
  c.add_output("yo", Pin{g, 1});
  c.add_output("zo", Pin{g, 2});
  return c;
}

// Fredkin with z tied to `z_value`, logical output on pin `out`.
Circuit fredkin_two_input(bool z_value, unsigned out) {
  Circuit c("core");
  const Pin a = c.add_input("a"), b = c.add_input("b");
  const NodeId g = c.add_gate(testing::fredkin(), {a, b, c.add_constant(z_value)});
  for (unsigned k = 0; k < 3; ++k) {
    if (k == out) {
      c.add_output("y", Pin{g, k});
    } else {
      c.mark_garbage(Pin{g, k});
    }
  }
  return c;
}

Circuit fredkin_fanout() {
  Circuit c("fanout");
  const Pin x = c.add_input("x");
  const NodeId g =
      c.add_gate(testing::fredkin(), {x, c.add_constant(false), c.add_constant(true)});
  c.add_output("y0", Pin{g, 0});
  c.add_output("y1", Pin{g, 1});
  c.mark_garbage(Pin{g, 2});
  return c;
}

Circuit fredkin_not() {
  Circuit c("not");
  const Pin x = c.add_input("x");
  const NodeId g =
      c.add_gate(testing::fredkin(), {x, c.add_constant(false), c.add_constant(true)});
  c.add_output("y", Pin{g, 2});
  c.mark_garbage(Pin{g, 0});
  c.mark_garbage(Pin{g, 1});
  return c;
}

Circuit identity(unsigned width) {
  Circuit c("identity");
  for (unsigned i = 0; i < width; ++i) {
    const Pin p = c.add_input("i" + std::to_string(i));
    c.add_output("o" + std::to_string(i), p);
  }
  return c;
}

TEST(Simulate, FredkinPassThrough) {
  EXPECT_EQ(simulate(fredkin_circuit(), 0b110), 0b101u);
}

TEST(Simulate, IdentityCircuit) {
  const Circuit c = identity(3);
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(simulate(c, x), x);
}

TEST(Simulate, FredkinFanout) {
  EXPECT_EQ(simulate(fredkin_fanout(), 1), 0b11u);
  EXPECT_EQ(simulate(fredkin_fanout(), 0), 0b00u);
}

TEST(Simulate, RejectsWideWord) {
  EXPECT_THROW(simulate(identity(2), 4), DomainError);
}

TEST(Simulate, TraceDump) {
  SimTrace trace;
  simulate(fredkin_not(), 1, &trace);
  const std::string dump = trace.dump();
  EXPECT_NE(dump.find("x=1\n"), std::string::npos);
  EXPECT_NE(dump.find(".2=0\n"), std::string::npos);
  EXPECT_EQ(trace.assignment.size(), 6u);  // x, two constants, three pins
}

TEST(TruthTableOf, FredkinAnd) {
  const Gate t = truth_table_of(fredkin_two_input(false, 2));
  EXPECT_EQ(t.table(), (std::vector<std::uint32_t>{0, 0, 0, 1}));
}

TEST(TruthTableOf, FredkinOr) {
  const Gate t = truth_table_of(fredkin_two_input(true, 1));
  EXPECT_EQ(t.table(), (std::vector<std::uint32_t>{0, 1, 1, 1}));
}

TEST(TruthTableOf, ConstantOnly) {
  Circuit c("one");
  c.add_output("y", c.add_constant(true));
  const Gate t = truth_table_of(c);
  EXPECT_EQ(t.n_inputs(), 0u);
  EXPECT_EQ(t.table(), (std::vector<std::uint32_t>{1}));
}

TEST(TruthTableOf, TooWide) {
  EXPECT_THROW(truth_table_of(identity(17)), TooWideError);
}

TEST(CheckEquivalence, NotGadgetMatchesTable) {
  const auto r = check_equivalence(fredkin_not(), defining_table(GadgetKind::kNot));
  EXPECT_TRUE(r.equivalent);
  EXPECT_FALSE(r.counterexample);
}

TEST(CheckEquivalence, IdentityIsNotNot) {
  const auto r = check_equivalence(identity(1), defining_table(GadgetKind::kNot));
  EXPECT_FALSE(r.equivalent);
  EXPECT_EQ(r.counterexample, 0u);
}

TEST(CheckEquivalence, SmallestCounterexample) {
  // AND vs OR differ first at 01.
  const auto r = check_equivalence(fredkin_two_input(false, 2),
                                   fredkin_two_input(true, 1));
  EXPECT_FALSE(r.equivalent);
  EXPECT_EQ(r.counterexample, 1u);
}

TEST(CheckEquivalence, ArityMismatch) {
  EXPECT_THROW(check_equivalence(identity(1), identity(2)), ArityMismatchError);
  EXPECT_THROW(check_equivalence(identity(2), defining_table(GadgetKind::kAnd)),
               ArityMismatchError);
}

TEST(Validate, Cycle) {
  Circuit c;
  const Pin a = c.add_input("a");
  const NodeId g1 = c.add_gate(testing::fredkin());
  const NodeId g2 = c.add_gate(testing::fredkin());
  c.connect(g1, 0, a);
  c.connect(g1, 1, Pin{g2, 0});
  c.connect(g1, 2, c.add_constant(true));
  c.connect(g2, 0, Pin{g1, 0});
  c.connect(g2, 1, c.add_constant(false));
  c.connect(g2, 2, c.add_constant(false));
  c.add_output("y", Pin{g2, 1});
  for (unsigned k : {1u, 2u}) c.mark_garbage(Pin{g1, k});
  c.mark_garbage(Pin{g2, 2});
  EXPECT_THROW(c.validate(), CycleError);
  EXPECT_THROW(simulate(c, 0), CycleError);
}

TEST(Validate, UndrivenGatePin) {
  Circuit c;
  const NodeId g = c.add_gate(testing::fredkin(), {c.add_input("a")});
  for (unsigned k = 0; k < 3; ++k) c.mark_garbage(Pin{g, k});
  EXPECT_THROW(c.validate(), DanglingPinError);
}

TEST(Validate, UndrivenOutput) {
  Circuit c;
  c.add_input("a");
  c.add_output("y");
  EXPECT_THROW(c.validate(), DanglingPinError);
}

TEST(Validate, UnaccountedPin) {
  Circuit c = fredkin_not();
  Circuit bare("bare");
  const Pin x = bare.add_input("x");
  bare.add_gate(testing::fredkin(),
                {x, bare.add_constant(false), bare.add_constant(true)});
  EXPECT_THROW(bare.validate(), UnaccountedPinError);
  EXPECT_NO_THROW(c.validate());
}

TEST(Validate, GarbageMustBeUnwired) {
  Circuit c = fredkin_not();
  c.mark_garbage(Pin{c.outputs()[0].driver->node, 2});
  EXPECT_THROW(c.validate(), GarbageConflictError);

  Circuit twice = fredkin_not();
  twice.mark_garbage(twice.garbage().front());
  EXPECT_THROW(twice.validate(), GarbageConflictError);

  Circuit on_input = identity(1);
  on_input.mark_garbage(Pin{0, 0});
  EXPECT_THROW(on_input.validate(), GarbageConflictError);
}

TEST(Validate, DuplicateNames) {
  Circuit c;
  c.add_input("a");
  EXPECT_THROW(c.add_input("a"), DuplicateNameError);
  EXPECT_THROW(c.add_constant(true, "a"), DuplicateNameError);
  c.add_output("y", Pin{0, 0});
  EXPECT_THROW(c.add_output("y", Pin{0, 0}), DuplicateNameError);
}

TEST(Splice, FreshCopies) {
  const Gadget fanout = wrap_gadget(GadgetKind::kFanout, fredkin_fanout());
  Circuit host("host");
  const Pin w = host.add_input("w");
  const auto legs = instantiate_gadget(host, fanout, std::span(&w, 1));
  ASSERT_EQ(legs.size(), 2u);
  const auto more = instantiate_gadget(host, fanout, std::span(&legs[0], 1));
  host.add_output("a", more[0]);
  host.add_output("b", more[1]);
  host.add_output("c", legs[1]);
  EXPECT_EQ(host.gate_count(), 2u);
  EXPECT_EQ(host.constant_count(), 4u);
  EXPECT_EQ(host.garbage().size(), 2u);
  EXPECT_EQ(simulate(host, 0), 0u);
  EXPECT_EQ(simulate(host, 1), 0b111u);
}

TEST(Splice, AndOnTwoWires) {
  const Gadget and_g = wrap_gadget(GadgetKind::kAnd, fredkin_two_input(false, 2));
  Circuit host("host");
  const Pin ins[] = {host.add_input("u"), host.add_input("v")};
  host.add_output("y", instantiate_gadget(host, and_g, ins)[0]);
  EXPECT_TRUE(check_equivalence(host, defining_table(GadgetKind::kAnd)).equivalent);
}

TEST(Splice, DoubleNegationIsIdentity) {
  const Gadget not_g = wrap_gadget(GadgetKind::kNot, fredkin_not());
  Circuit host("host");
  Pin w = host.add_input("w");
  w = instantiate_gadget(host, not_g, std::span(&w, 1))[0];
  w = instantiate_gadget(host, not_g, std::span(&w, 1))[0];
  host.add_output("y", w);
  EXPECT_EQ(host.gate_count(), 2u);
  EXPECT_TRUE(check_equivalence(host, identity(1)).equivalent);
}

TEST(Splice, ArityMismatch) {
  const Gadget not_g = wrap_gadget(GadgetKind::kNot, fredkin_not());
  Circuit host;
  const Pin ins[] = {host.add_input("a"), host.add_input("b")};
  EXPECT_THROW(instantiate_gadget(host, not_g, ins), ArityMismatchError);
}

TEST(WrapGadget, RejectsWrongFunction) {
  EXPECT_THROW(wrap_gadget(GadgetKind::kNot, identity(1)),
               GadgetVerificationError);
  EXPECT_THROW(wrap_gadget(GadgetKind::kAnd, fredkin_two_input(true, 1)),
               GadgetVerificationError);
}

// Random DAG over random gates; unused gate pins become garbage.
Circuit random_circuit(std::mt19937_64& rng) {
  Circuit c("random");
  std::vector<Pin> signals;
  const unsigned n_in = 1 + rng() % 5;
  for (unsigned i = 0; i < n_in; ++i) {
    signals.push_back(c.add_input("i" + std::to_string(i)));
  }
  if (rng() & 1u) signals.push_back(c.add_constant(rng() & 1u));
  const unsigned n_gates = 1 + rng() % 6;
  for (unsigned k = 0; k < n_gates; ++k) {
    const unsigned n = 1 + rng() % 3, m = 1 + rng() % 3;
    auto g = std::make_shared<const Gate>(testing::random_gate(rng, n, m, false));
    std::vector<std::optional<Pin>> fanin;
    for (unsigned i = 0; i < n; ++i) fanin.push_back(signals[rng() % signals.size()]);
    const NodeId id = c.add_gate(g, fanin);
    for (unsigned p = 0; p < m; ++p) signals.push_back(Pin{id, p});
  }
  const unsigned n_out = 1 + rng() % 4;
  for (unsigned o = 0; o < n_out; ++o) {
    c.add_output("o" + std::to_string(o), signals[rng() % signals.size()]);
  }
  std::vector<bool> used(signals.size(), false);
  for (const auto& node : c.nodes()) {
    for (const auto& d : node.fanin) {
      for (std::size_t s = 0; s < signals.size(); ++s) used[s] = used[s] || signals[s] == *d;
    }
  }
  for (const auto& port : c.outputs()) {
    for (std::size_t s = 0; s < signals.size(); ++s) used[s] = used[s] || signals[s] == *port.driver;
  }
  for (std::size_t s = 0; s < signals.size(); ++s) {
    if (!used[s] && c.nodes()[signals[s].node].kind == NodeKind::kGate) {
      c.mark_garbage(signals[s]);
    }
  }
  return c;
}

TEST(CircuitProperty, EquivalentToOwnTable) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c = random_circuit(rng);
    ASSERT_NO_THROW(c.validate());
    EXPECT_TRUE(check_equivalence(c, truth_table_of(c)).equivalent);
  }
}

TEST(CircuitProperty, GarbageNeverFeedsLogic) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c = random_circuit(rng);
    for (Pin g : c.garbage()) {
      for (const auto& node : c.nodes()) {
        for (const auto& d : node.fanin) ASSERT_NE(*d, g);
      }
      for (const auto& port : c.outputs()) ASSERT_NE(*port.driver, g);
    }
  }
}

TEST(CircuitProperty, ConcurrentSimulationAgrees) {
  std::mt19937_64 rng(8);
  const Circuit c = random_circuit(rng);
  const Gate expected = truth_table_of(c);
  const Simulator sim(c);
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::uint32_t x = 0; x < expected.rows(); ++x) {
        mismatches[t] += sim.run(x) != expected.table()[x];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) EXPECT_EQ(m, 0);
}

}  // namespace
}  // namespace onegate

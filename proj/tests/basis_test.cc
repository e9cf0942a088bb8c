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

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "onegate/basis.h"
#include "onegate/errors.h"
#include "onegate/netlist.h"
#include "onegate/sweep.h"
#include "test_util.h"

namespace onegate {
namespace {

using testing::cnot;
using testing::fredkin;
using testing::gate_from;
using testing::toffoli;
using testing::wire_swap;

std::uint32_t bit_of(std::uint32_t word, unsigned width, unsigned i) {
  return (word >> (width - 1 - i)) & 1u;
}

// Brute force over single-input restrictions by direct evaluation: varied
// input from last to first, fixing of the others ascending (first other
// input most significant), outputs ascending. Returns (varied, full input
// word with the varied bit cleared, output) of the first row pair where
// the output reads 1 then 0.
std::optional<std::tuple<unsigned, std::uint32_t, unsigned>> brute_force_not(
    const Gate& g) {
  const unsigned n = g.n_inputs(), m = g.n_outputs();
  for (unsigned j = n; j-- > 0;) {
    for (std::uint32_t f = 0; f < (1u << (n - 1)); ++f) {
      // Spread f over the inputs other than j.
      std::uint32_t base = 0;
      unsigned taken = 0;
      for (unsigned i = 0; i < n; ++i) {
        if (i == j) continue;
        const std::uint32_t b = (f >> (n - 2 - taken)) & 1u;
        base |= b << (n - 1 - i);
        ++taken;
      }
      const std::uint32_t lo = g.table()[base];
      const std::uint32_t hi = g.table()[base | (1u << (n - 1 - j))];
      for (unsigned c = 0; c < m; ++c) {
        if (bit_of(lo, m, c) == 1 && bit_of(hi, m, c) == 0) {
          return std::make_tuple(j, base, c);
        }
      }
    }
  }
  return std::nullopt;
}

// First (pair, fixing, output) whose 4-row restriction has odd parity,
// i.e. is non-affine; evaluated directly.
std::optional<std::tuple<unsigned, unsigned, std::uint32_t, unsigned>>
brute_force_core(const Gate& g) {
  const unsigned n = g.n_inputs(), m = g.n_outputs();
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      for (std::uint32_t f = 0; f < (1u << (n - 2)); ++f) {
        std::uint32_t base = 0;
        unsigned taken = 0;
        for (unsigned k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          base |= ((f >> (n - 3 - taken)) & 1u) << (n - 1 - k);
          ++taken;
        }
        const std::uint32_t bi = 1u << (n - 1 - i), bj = 1u << (n - 1 - j);
        for (unsigned c = 0; c < m; ++c) {
          const auto v = [&](std::uint32_t w) { return bit_of(g.table()[w], m, c); };
          if (v(base) ^ v(base | bi) ^ v(base | bj) ^ v(base | bi | bj)) {
            return std::make_tuple(i, j, base, c);
          }
        }
      }
    }
  }
  return std::nullopt;
}

TEST(NonAffineCoreTable, EnumeratesAllTwoInputFunctions) {
  int non_affine = 0;
  for (std::uint8_t code = 0; code < 16; ++code) {
    const Column col{static_cast<std::uint8_t>((code >> 3) & 1),
                     static_cast<std::uint8_t>((code >> 2) & 1),
                     static_cast<std::uint8_t>((code >> 1) & 1),
                     static_cast<std::uint8_t>(code & 1)};
    const bool affine = fit_affine(col).has_value();
    const CoreForm* form = find_core_form(col);
    EXPECT_EQ(form == nullptr, affine) << int(code);
    if (affine) continue;
    ++non_affine;
    for (std::uint8_t a = 0; a < 2; ++a) {
      for (std::uint8_t b = 0; b < 2; ++b) {
        // The closed form reproduces the function.
        const bool f = form->out ^ ((a ^ form->s) & (b ^ form->t));
        EXPECT_EQ(f, col[a * 2 + b] != 0);
        // Inverting the flagged legs yields AND, the unflagged ones OR.
        const bool as_and =
            form->out ^ col[(a ^ form->s) * 2 + (b ^ form->t)];
        EXPECT_EQ(as_and, a && b);
        const bool as_or =
            !form->out ^ col[(a ^ !form->s) * 2 + (b ^ !form->t)];
        EXPECT_EQ(as_or, a || b);
      }
    }
  }
  EXPECT_EQ(non_affine, 8);
}

TEST(FindTwoInputCore, FredkinAnd) {
  const auto core = find_two_input_core(*fredkin(), CoreTarget::kAnd);
  ASSERT_TRUE(core);
  EXPECT_EQ(core->restriction.free, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(core->restriction.fixed, (std::map<unsigned, bool>{{2, false}}));
  EXPECT_EQ(core->output, 2u);
  EXPECT_EQ(core->function, (Column{0, 0, 0, 1}));
}

TEST(FindTwoInputCore, FredkinOr) {
  const auto core = find_two_input_core(*fredkin(), CoreTarget::kOr);
  ASSERT_TRUE(core);
  EXPECT_EQ(core->restriction.fixed, (std::map<unsigned, bool>{{2, true}}));
  EXPECT_EQ(core->output, 1u);
  EXPECT_EQ(core->function, (Column{0, 1, 1, 1}));
}

TEST(FindTwoInputCore, FirstHitMatchesBruteForce) {
  for (const GateRef& g : {fredkin(), toffoli()}) {
    const auto core = find_two_input_core(*g, CoreTarget::kFirst);
    const auto oracle = brute_force_core(*g);
    ASSERT_TRUE(core && oracle);
    const auto [i, j, base, c] = *oracle;
    EXPECT_EQ(core->restriction.free, (std::vector<unsigned>{i, j}));
    EXPECT_EQ(core->restriction.merge(g->n_inputs(), 0), base);
    EXPECT_EQ(core->output, c);
  }
  // Plain first hit on Fredkin is y2 = ~x & y under z = 0.
  const auto first = find_two_input_core(*fredkin(), CoreTarget::kFirst);
  EXPECT_EQ(first->output, 1u);
  EXPECT_EQ(first->function, (Column{0, 1, 0, 0}));
}

TEST(FindTwoInputCore, Toffoli) {
  const auto core = find_two_input_core(*toffoli(), CoreTarget::kAnd);
  ASSERT_TRUE(core);
  EXPECT_EQ(core->restriction.free, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(core->restriction.fixed, (std::map<unsigned, bool>{{2, false}}));
  EXPECT_EQ(core->output, 2u);
  EXPECT_EQ(core->function, (Column{0, 0, 0, 1}));
}

TEST(FindTwoInputCore, AbsentExactlyOnAffineGates) {
  EXPECT_FALSE(find_two_input_core(*cnot()));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 2 + rng() % 5, m = 1 + rng() % 3;
    const Gate g = testing::random_gate(rng, n, m, true);
    EXPECT_EQ(find_two_input_core(g, CoreTarget::kFirst).has_value(),
              !classify(g).affine);
    EXPECT_EQ(brute_force_core(g).has_value(), !classify(g).affine);
  }
}

TEST(ExtractNot, Fredkin) {
  const Gadget g = extract_not(fredkin());
  EXPECT_EQ(g.binding.fixed, (std::map<unsigned, bool>{{1, false}, {2, true}}));
  EXPECT_EQ(g.binding.role_inputs, (std::vector<unsigned>{0}));
  EXPECT_EQ(g.binding.role_outputs, (std::vector<unsigned>{2}));
  EXPECT_EQ(g.gate_copies, 1u);
  EXPECT_EQ(g.garbage_count, 2u);
}

TEST(ExtractNot, ToffoliIsFirstHitOfBruteForce) {
  const Gadget g = extract_not(toffoli());
  EXPECT_EQ(g.binding.fixed, (std::map<unsigned, bool>{{0, true}, {1, true}}));
  EXPECT_EQ(g.binding.role_inputs, (std::vector<unsigned>{2}));
  EXPECT_EQ(g.binding.role_outputs, (std::vector<unsigned>{2}));
  const auto oracle = brute_force_not(*toffoli());
  ASSERT_TRUE(oracle);
  EXPECT_EQ(*oracle, std::make_tuple(2u, 0b110u, 2u));
}

TEST(ExtractNot, AgreesWithBruteForceOnRandomGates) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned n = 1 + rng() % 4, m = 1 + rng() % 3;
    auto g = std::make_shared<const Gate>(testing::random_gate(rng, n, m, true));
    const auto oracle = brute_force_not(*g);
    if (!oracle) {
      EXPECT_THROW(extract_not(g), TrivialGateError);
      continue;
    }
    const Gadget not_g = extract_not(g);
    const auto [j, base, c] = *oracle;
    EXPECT_EQ(not_g.binding.role_inputs[0], j);
    EXPECT_EQ(not_g.binding.role_outputs[0], c);
    Restriction r{not_g.binding.fixed, {j}};
    EXPECT_EQ(r.merge(n, 0), base);
  }
}

TEST(ExtractNot, WireSwapIsTrivial) {
  EXPECT_THROW(extract_not(wire_swap()), TrivialGateError);
}

TEST(ExtractFanout, Fredkin) {
  const Gadget not_g = extract_not(fredkin());
  const Gadget g = extract_fanout(fredkin(), not_g);
  EXPECT_EQ(g.binding.fixed, (std::map<unsigned, bool>{{1, false}, {2, true}}));
  EXPECT_EQ(g.binding.role_inputs, (std::vector<unsigned>{0}));
  EXPECT_EQ(g.binding.role_outputs, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(g.binding.output_inverted, (std::vector<bool>{false, false}));
  EXPECT_EQ(g.gate_copies, 1u);
}

TEST(ExtractFanout, Cnot) {
  const Gadget not_g = extract_not(cnot());
  const Gadget g = extract_fanout(cnot(), not_g);
  EXPECT_EQ(g.binding.fixed, (std::map<unsigned, bool>{{1, false}}));
  EXPECT_EQ(g.binding.role_inputs, (std::vector<unsigned>{0}));
  EXPECT_EQ(g.binding.role_outputs, (std::vector<unsigned>{0, 1}));
}

TEST(ExtractFanout, SingleOutputGateHasNone) {
  const Gadget not_g = extract_not(fredkin());
  EXPECT_THROW(extract_fanout(testing::load_gate("and2.tt"), not_g),
               NoFanoutError);
}

TEST(ExtractFanout, ComplementedLegGetsNot) {
  // (x, y) -> (x, ~x ^ y): under y = 0 the legs are x and ~x.
  const GateRef g = gate_from("xnorish", 2, 2, [](std::uint32_t w) {
    const std::uint32_t x = w >> 1, y = w & 1u;
    return (x << 1) | (x ^ y ^ 1u);
  });
  const Gadget not_g = extract_not(fredkin());
  const Gadget fan = extract_fanout(g, not_g);
  EXPECT_EQ(fan.binding.not_count(), 1u);
  EXPECT_EQ(fan.gate_copies, 2u);
}

// Gates with a single output used as two-input cores.
GateRef two_input(const char* name, std::uint8_t code) {
  return gate_from(name, 2, 1, [code](std::uint32_t w) {
    return static_cast<std::uint32_t>((code >> (3 - w)) & 1u);
  });
}

TEST(DeriveAndOr, FromAnd) {
  const GateRef g = two_input("and", 0b0001);
  const Gadget not_g = extract_not(fredkin());
  const auto core = find_two_input_core(*g, CoreTarget::kFirst);
  ASSERT_TRUE(core);
  const auto [and_g, or_g] = derive_and_or(g, *core, not_g);
  EXPECT_EQ(and_g.binding.not_count(), 0u);
  EXPECT_EQ(and_g.gate_copies, 1u);
  EXPECT_EQ(or_g.binding.not_count(), 3u);
  EXPECT_EQ(or_g.gate_copies, 4u);
}

TEST(DeriveAndOr, FromNor) {
  const GateRef g = two_input("nor", 0b1000);
  const Gadget not_g = extract_not(g);
  const auto core = find_two_input_core(*g, CoreTarget::kFirst);
  const auto [and_g, or_g] = derive_and_or(g, *core, not_g);
  EXPECT_EQ(and_g.binding.input_inverted, (std::vector<bool>{true, true}));
  EXPECT_EQ(and_g.binding.output_inverted, (std::vector<bool>{false}));
  EXPECT_EQ(or_g.binding.input_inverted, (std::vector<bool>{false, false}));
  EXPECT_EQ(or_g.binding.output_inverted, (std::vector<bool>{true}));
}

TEST(DeriveAndOr, FromOrWithInvertedSecondInput) {
  const GateRef g = two_input("or_not_b", 0b1011);
  const Gadget not_g = extract_not(fredkin());
  const auto core = find_two_input_core(*g, CoreTarget::kFirst);
  const auto [and_g, or_g] = derive_and_or(g, *core, not_g);
  EXPECT_EQ(or_g.binding.input_inverted, (std::vector<bool>{false, true}));
  EXPECT_EQ(or_g.binding.output_inverted, (std::vector<bool>{false}));
  EXPECT_EQ(and_g.binding.not_count(), 2u);
}

TEST(DeriveAndOr, RejectsAffineCore) {
  const GateRef g = two_input("xor", 0b0110);
  const Gadget not_g = extract_not(fredkin());
  TwoInputCore core{Restriction{{}, {0, 1}}, 0, Column{0, 1, 1, 0}};
  EXPECT_THROW(derive_and_or(g, core, not_g), CoreNotNonAffine);
}

TEST(ExtractBasis, FredkinReproducesClassicConstructions) {
  const BasisKit kit = extract_basis(fredkin());
  const std::map<unsigned, bool> y0_z1{{1, false}, {2, true}};
  EXPECT_EQ(kit.fanout_g.binding.fixed, y0_z1);
  EXPECT_EQ(kit.fanout_g.binding.role_outputs, (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(kit.not_g.binding.fixed, y0_z1);
  EXPECT_EQ(kit.not_g.binding.role_outputs, (std::vector<unsigned>{2}));
  EXPECT_EQ(kit.and_g.binding.fixed, (std::map<unsigned, bool>{{2, false}}));
  EXPECT_EQ(kit.and_g.binding.role_outputs, (std::vector<unsigned>{2}));
  EXPECT_EQ(kit.or_g.binding.fixed, (std::map<unsigned, bool>{{2, true}}));
  EXPECT_EQ(kit.or_g.binding.role_outputs, (std::vector<unsigned>{1}));
  for (GadgetKind k : {GadgetKind::kNot, GadgetKind::kAnd, GadgetKind::kOr,
                       GadgetKind::kFanout}) {
    EXPECT_EQ(kit.get(k).gate_copies, 1u);
    EXPECT_EQ(kit.get(k).binding.not_count(), 0u);
    EXPECT_TRUE(check_equivalence(kit.get(k).circuit, defining_table(k)).equivalent);
  }
}

TEST(ExtractBasis, Toffoli) {
  const BasisKit kit = extract_basis(toffoli());
  EXPECT_EQ(kit.and_g.binding.fixed, (std::map<unsigned, bool>{{2, false}}));
  EXPECT_EQ(kit.and_g.binding.role_outputs, (std::vector<unsigned>{2}));
  EXPECT_EQ(kit.not_g.binding.role_inputs, (std::vector<unsigned>{2}));
}

TEST(ExtractBasis, ClassificationErrors) {
  try {
    extract_basis(cnot());
    FAIL();
  } catch (const ClassificationError& e) {
    EXPECT_EQ(e.reason(), ClassificationError::Reason::kAffine);
  }
  try {
    extract_basis(testing::load_gate("and2.tt"));
    FAIL();
  } catch (const ClassificationError& e) {
    EXPECT_EQ(e.reason(), ClassificationError::Reason::kNotOneToOne);
  }
  BasisOptions with_not{extract_not(fredkin())};
  try {
    extract_basis(testing::load_gate("and2.tt"), with_not);
    FAIL();
  } catch (const ClassificationError& e) {
    EXPECT_EQ(e.reason(), ClassificationError::Reason::kNotInjective);
  }
}

TEST(ExtractBasis, InjectiveModeWithExternalNot) {
  // (x, y) -> (x, y, x & y): injective, not one-to-one.
  const GateRef g = gate_from("widen", 2, 3, [](std::uint32_t w) {
    return (w << 1) | (w == 3 ? 1u : 0u);
  });
  EXPECT_THROW(extract_basis(g), ClassificationError);
  const BasisKit kit = extract_basis(g, BasisOptions{extract_not(fredkin())});
  EXPECT_EQ(kit.fanout_g.binding.gate, g);
  EXPECT_EQ(kit.and_g.binding.role_outputs, (std::vector<unsigned>{2}));
  EXPECT_EQ(kit.and_g.binding.not_count(), 0u);
}

TEST(ExtractBasis, Deterministic) {
  const BasisKit a = extract_basis(toffoli());
  const BasisKit b = extract_basis(toffoli());
  EXPECT_EQ(describe_kit(a), describe_kit(b));
  for (GadgetKind k : {GadgetKind::kNot, GadgetKind::kAnd, GadgetKind::kOr,
                       GadgetKind::kFanout}) {
    EXPECT_EQ(emit_netlist(a.get(k).circuit), emit_netlist(b.get(k).circuit));
    EXPECT_TRUE(a.get(k).circuit == b.get(k).circuit);
  }
}

TEST(ExtractBasis, GadgetsUseOnlySourceGateAndConstants) {
  const GateRef g = toffoli();
  const BasisKit kit = extract_basis(g);
  for (GadgetKind k : {GadgetKind::kNot, GadgetKind::kAnd, GadgetKind::kOr,
                       GadgetKind::kFanout}) {
    for (const auto& node : kit.get(k).circuit.nodes()) {
      if (node.kind == NodeKind::kGate) EXPECT_EQ(node.gate, g);
    }
  }
}

TEST(ExtractBasis, FourBitRandomPermutations) {
  std::mt19937_64 rng(41);
  int non_affine = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> perm(16);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto g = std::make_shared<const Gate>("p", 4, 4, perm);
    if (classify(*g).affine) continue;
    ++non_affine;
    EXPECT_NO_THROW(extract_basis(g));
  }
  EXPECT_GT(non_affine, 150);
}

// Every injective non-affine gate must admit a fan-out restriction.
TEST(FanoutAudit, RandomInjectiveGates) {
  std::mt19937_64 rng(43);
  const Gadget not_g = extract_not(fredkin());
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 400; ++trial) {
    const unsigned n = 2 + rng() % 3, m = n + rng() % 3;
    std::vector<std::uint32_t> words(std::size_t{1} << m);
    std::iota(words.begin(), words.end(), 0u);
    std::shuffle(words.begin(), words.end(), rng);
    words.resize(std::size_t{1} << n);
    auto g = std::make_shared<const Gate>("inj", n, m, words);
    if (classify(*g).affine) continue;
    ++checked;
    ASSERT_NO_THROW(extract_fanout(g, not_g)) << emit_truth_table(*g);
  }
  EXPECT_GT(checked, 100);
}

TEST(Sweep, TwoBitGatesAreAllAffine) {
  SweepOptions options;
  options.bits = 2;
  const SweepReport r = sweep_permutations(options);
  EXPECT_EQ(r.gates, 24u);
  EXPECT_EQ(r.affine, 24u);
  EXPECT_EQ(r.wire_permutations, 2u);
  EXPECT_EQ(r.not_failures, 2u);
  EXPECT_TRUE(r.consistent());
}

TEST(Sweep, NthPermutationIsLexicographic) {
  std::vector<std::uint32_t> perm(8);
  std::iota(perm.begin(), perm.end(), 0u);
  for (std::uint64_t i = 0; i < 500; ++i) {
    ASSERT_EQ(nth_permutation(3, i), perm);
    std::next_permutation(perm.begin(), perm.end());
  }
  EXPECT_THROW(nth_permutation(2, 24), DomainError);
}

TEST(Sweep, GroupOrderFormula) {
  EXPECT_EQ(affine_bijection_count(1), 2u);
  EXPECT_EQ(affine_bijection_count(2), 24u);
  EXPECT_EQ(affine_bijection_count(3), 1344u);
  EXPECT_EQ(affine_bijection_count(4), 20160u * 16u);
}

TEST(Sweep, ShardsAddUp) {
  SweepOptions whole;
  whole.bits = 3;
  whole.begin = 1000;
  whole.end = 3000;
  const SweepReport all = sweep_permutations(whole);
  SweepOptions lo = whole, hi = whole;
  lo.end = 2100;
  hi.begin = 2100;
  const SweepReport a = sweep_permutations(lo);
  const SweepReport b = sweep_permutations(hi);
  EXPECT_EQ(a.gates + b.gates, all.gates);
  EXPECT_EQ(a.affine + b.affine, all.affine);
  EXPECT_EQ(a.kit_digest + b.kit_digest, all.kit_digest);
  SweepOptions threaded = whole;
  threaded.jobs = 3;
  const SweepReport t = sweep_permutations(threaded);
  EXPECT_EQ(t.kit_digest, all.kit_digest);
  EXPECT_EQ(t.basis_kits_verified, all.basis_kits_verified);
  EXPECT_FALSE(all.expected_affine);
}

}  // namespace
}  // namespace onegate

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

#include "onegate/lower.h"

#include <deque>
#include <unordered_map>

#include "onegate/errors.h"

namespace onegate {

namespace {

// Hands out one pin per consumer of each source signal.
class SignalSupply {
 public:
  SignalSupply(Circuit& circuit, const BasisKit& kit,
               std::unordered_map<std::string, std::size_t> uses)
      : circuit_(circuit), kit_(kit), uses_(std::move(uses)) {}

  // Registers the pin carrying `name` and splits it into one leg per use.
  void define(const std::string& name, Pin pin) {
    const std::size_t d = uses_[name];
    std::deque<Pin>& legs = legs_[name];
    if (d == 0) {
      if (circuit_.nodes()[pin.node].kind == NodeKind::kGate) {
        circuit_.mark_garbage(pin);
      }
      return;
    }
    Pin rest = pin;
    for (std::size_t k = 1; k < d; ++k) {
      const auto pair =
          instantiate_gadget(circuit_, kit_.fanout_g, std::span(&rest, 1));
      ++fanouts_;
      legs.push_back(pair[0]);
      rest = pair[1];
    }
    legs.push_back(rest);
  }

  Pin take(const std::string& name) {
    std::deque<Pin>& legs = legs_.at(name);
    const Pin p = legs.front();
    legs.pop_front();
    return p;
  }

  std::size_t fanouts() const { return fanouts_; }

 private:
  Circuit& circuit_;
  const BasisKit& kit_;
  std::unordered_map<std::string, std::size_t> uses_;
  std::unordered_map<std::string, std::deque<Pin>> legs_;
  std::size_t fanouts_ = 0;
};

const Gadget& gadget_for(const BasisKit& kit, Op op) {
  switch (op) {
    case Op::kAnd:
      return kit.and_g;
    case Op::kOr:
      return kit.or_g;
    case Op::kNot:
      return kit.not_g;
    default:
      throw DomainError("constants have no gadget");
  }
}

}  // namespace

LoweringResult lower_to_basis(const SourceNetlist& src, const BasisKit& kit) {
  std::unordered_map<std::string, std::size_t> uses;
  for (const auto& s : src.statements) {
    for (const auto& o : s.operands) ++uses[o];
  }
  for (const auto& o : src.outputs) ++uses[o];

  Circuit c("lowered");
  SignalSupply supply(c, kit, std::move(uses));
  for (const auto& in : src.inputs) supply.define(in, c.add_input(in));

  for (const auto& s : src.statements) {
    if (s.op == Op::kConst0 || s.op == Op::kConst1) {
      supply.define(s.target, c.add_constant(s.op == Op::kConst1, s.target));
      continue;
    }
    std::vector<Pin> ins;
    for (const auto& o : s.operands) ins.push_back(supply.take(o));
    const Pin out = instantiate_gadget(c, gadget_for(kit, s.op), ins).front();
    if (c.pin_name(out).starts_with('$')) c.rename(out, s.target);
    supply.define(s.target, out);
  }
  for (const auto& o : src.outputs) c.add_output(o, supply.take(o));

  const auto check = check_equivalence(c, reference_table(src));
  if (!check.equivalent) {
    throw EquivalenceFailure(
        "lowered circuit differs from the source at input " +
        to_bits(*check.counterexample, static_cast<unsigned>(src.inputs.size())));
  }

  LoweringReport report;
  report.gate_copies = c.gate_count();
  report.fanouts_inserted = supply.fanouts();
  report.constant_sources = c.constant_count();
  report.garbage_outputs = c.garbage().size();
  return {std::move(c), report};
}

}  // namespace onegate

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

#include "onegate/gadget.h"

#include <algorithm>
#include <string>

#include "onegate/errors.h"

namespace onegate {

std::string_view to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::kNot:
      return "NOT";
    case GadgetKind::kAnd:
      return "AND";
    case GadgetKind::kOr:
      return "OR";
    case GadgetKind::kFanout:
      return "FANOUT";
  }
  return "?";
}

const Gate& defining_table(GadgetKind kind) {
  static const Gate kNotTable("not", 1, 1, {1, 0});
  static const Gate kAndTable("and", 2, 1, {0, 0, 0, 1});
  static const Gate kOrTable("or", 2, 1, {0, 1, 1, 1});
  static const Gate kFanoutTable("fanout", 1, 2, {0, 3});
  switch (kind) {
    case GadgetKind::kNot:
      return kNotTable;
    case GadgetKind::kAnd:
      return kAndTable;
    case GadgetKind::kOr:
      return kOrTable;
    case GadgetKind::kFanout:
      return kFanoutTable;
  }
  return kNotTable;
}

void PinBinding::validate() const {
  if (!gate) throw DomainError("binding has no gate");
  const unsigned n = gate->n_inputs();
  std::vector<bool> seen(n, false);
  auto mark = [&](unsigned i) {
    if (i >= n || seen[i]) throw DomainError("binding: bad input pin");
    seen[i] = true;
  };
  for (const auto& [i, v] : fixed) mark(i);
  for (unsigned i : role_inputs) mark(i);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("binding leaves an input pin unassigned");
  }
  std::vector<bool> used(gate->n_outputs(), false);
  for (unsigned c : role_outputs) {
    if (c >= gate->n_outputs() || used[c]) {
      throw DomainError("binding: bad output pin");
    }
    used[c] = true;
  }
  if (input_inverted.size() != role_inputs.size() ||
      output_inverted.size() != role_outputs.size()) {
    throw DomainError("binding: inversion flags do not match roles");
  }
}

unsigned PinBinding::not_count() const {
  return static_cast<unsigned>(
      std::count(input_inverted.begin(), input_inverted.end(), true) +
      std::count(output_inverted.begin(), output_inverted.end(), true));
}

unsigned Gadget::logical_inputs() const {
  return defining_table(kind).n_inputs();
}

unsigned Gadget::logical_outputs() const {
  return defining_table(kind).n_outputs();
}

namespace {

const char* const kInputNames[] = {"a", "b"};

}  // namespace

Gadget build_gadget(GadgetKind kind, const PinBinding& binding,
                    const Gadget* not_gadget) {
  binding.validate();
  const Gate& want = defining_table(kind);
  if (binding.role_inputs.size() != want.n_inputs() ||
      binding.role_outputs.size() != want.n_outputs()) {
    throw ArityMismatchError(std::string(to_string(kind)) +
                             " gadget binding has the wrong role count");
  }
  if (binding.not_count() > 0 &&
      (not_gadget == nullptr || not_gadget->kind != GadgetKind::kNot)) {
    throw DomainError("inverted leg without a NOT gadget");
  }

  Circuit c(std::string(to_string(kind)));
  const GateRef& gate = binding.gate;
  std::vector<std::optional<Pin>> fanin(gate->n_inputs());
  std::vector<Pin> legs;
  for (unsigned k = 0; k < binding.role_inputs.size(); ++k) {
    Pin p = c.add_input(want.n_inputs() == 1 ? "x" : kInputNames[k]);
    legs.push_back(p);
  }
  for (unsigned k = 0; k < binding.role_inputs.size(); ++k) {
    Pin p = legs[k];
    if (binding.input_inverted[k]) {
      p = instantiate_gadget(c, *not_gadget, std::span(&p, 1)).front();
    }
    fanin[binding.role_inputs[k]] = p;
  }
  for (const auto& [pin, value] : binding.fixed) {
    fanin[pin] = c.add_constant(value);
  }
  const NodeId core = c.add_gate(gate, std::move(fanin));

  std::vector<bool> is_role(gate->n_outputs(), false);
  for (unsigned k = 0; k < binding.role_outputs.size(); ++k) {
    const unsigned out = binding.role_outputs[k];
    is_role[out] = true;
    Pin p{core, out};
    if (binding.output_inverted[k]) {
      p = instantiate_gadget(c, *not_gadget, std::span(&p, 1)).front();
    }
    c.add_output(want.n_outputs() == 1 ? "y" : "y" + std::to_string(k), p);
  }
  for (unsigned out = 0; out < gate->n_outputs(); ++out) {
    if (!is_role[out]) c.mark_garbage(Pin{core, out});
  }

  Gadget g;
  g.kind = kind;
  g.binding = binding;
  g.gate_copies = c.gate_count();
  g.garbage_count = c.garbage().size();
  g.circuit = std::move(c);
  verify_gadget(g);
  return g;
}

Gadget wrap_gadget(GadgetKind kind, Circuit circuit) {
  Gadget g;
  g.kind = kind;
  g.gate_copies = circuit.gate_count();
  g.garbage_count = circuit.garbage().size();
  g.circuit = std::move(circuit);
  verify_gadget(g);
  return g;
}

void verify_gadget(const Gadget& g) {
  const Gate& want = defining_table(g.kind);
  if (g.circuit.n_inputs() != want.n_inputs() ||
      g.circuit.n_outputs() != want.n_outputs()) {
    throw GadgetVerificationError(std::string(to_string(g.kind)) +
                                  " gadget has the wrong arity");
  }
  const auto result = check_equivalence(g.circuit, want);
  if (!result.equivalent) {
    throw GadgetVerificationError(
        std::string(to_string(g.kind)) + " gadget is wrong at input " +
        to_bits(*result.counterexample, want.n_inputs()));
  }
}

std::vector<Pin> instantiate_gadget(Circuit& host, const Gadget& g,
                                    std::span<const Pin> inputs) {
  if (inputs.size() != g.logical_inputs()) {
    throw ArityMismatchError(std::string(to_string(g.kind)) +
                             " gadget takes " +
                             std::to_string(g.logical_inputs()) + " inputs");
  }
  return host.splice(g.circuit, inputs);
}

}  // namespace onegate

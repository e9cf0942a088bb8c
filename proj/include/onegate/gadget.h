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

#ifndef ONEGATE_GADGET_H_
#define ONEGATE_GADGET_H_

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "onegate/circuit.h"
#include "onegate/gate.h"

namespace onegate {

enum class GadgetKind { kNot, kAnd, kOr, kFanout };

std::string_view to_string(GadgetKind kind);

// NOT: 10, AND: 0001, OR: 0111, FANOUT: 1 -> 11.
const Gate& defining_table(GadgetKind kind);

// How one copy of a gate is used: which pins are tied to constants and
// which carry the gadget's logical signals. Indices are 0-based.
struct PinBinding {
  GateRef gate;
  std::map<unsigned, bool> fixed;
  std::vector<unsigned> role_inputs;
  std::vector<unsigned> role_outputs;
  // A set flag means a NOT gadget sits on that leg.
  std::vector<bool> input_inverted;
  std::vector<bool> output_inverted;

  // Throws DomainError on a malformed binding.
  void validate() const;
  unsigned not_count() const;

  friend bool operator==(const PinBinding& a, const PinBinding& b) {
    return a.fixed == b.fixed && a.role_inputs == b.role_inputs &&
           a.role_outputs == b.role_outputs &&
           a.input_inverted == b.input_inverted &&
           a.output_inverted == b.output_inverted &&
           (a.gate == b.gate || (a.gate && b.gate && *a.gate == *b.gate));
  }
};

struct Gadget {
  GadgetKind kind = GadgetKind::kNot;
  Circuit circuit;
  PinBinding binding;
  std::size_t gate_copies = 0;
  std::size_t garbage_count = 0;

  unsigned logical_inputs() const;
  unsigned logical_outputs() const;
};

// Builds a gadget of `kind` from one copy of binding.gate. Inverted legs are
// realized with copies of `not_gadget`, which must be present if any
// inversion flag is set. The result is verified before it is returned.
Gadget build_gadget(GadgetKind kind, const PinBinding& binding,
                    const Gadget* not_gadget = nullptr);

// Wraps an existing circuit as a gadget after verifying it.
Gadget wrap_gadget(GadgetKind kind, Circuit circuit);

// Throws GadgetVerificationError unless the circuit realizes `kind` exactly.
void verify_gadget(const Gadget& g);

// Splices a fresh copy of `g` into `host`; returns its logical outputs.
std::vector<Pin> instantiate_gadget(Circuit& host, const Gadget& g,
                                    std::span<const Pin> inputs);

}  // namespace onegate

#endif  // ONEGATE_GADGET_H_

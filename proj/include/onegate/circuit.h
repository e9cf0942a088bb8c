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

#ifndef ONEGATE_CIRCUIT_H_
#define ONEGATE_CIRCUIT_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onegate/gate.h"

namespace onegate {

using NodeId = std::uint32_t;

// An output pin of a node. Primary inputs and constants have one pin.
struct Pin {
  NodeId node = 0;
  unsigned index = 0;

  friend auto operator<=>(const Pin&, const Pin&) = default;
};

enum class NodeKind { kInput, kConstant, kGate };

struct Node {
  NodeKind kind = NodeKind::kGate;
  bool value = false;
  GateRef gate;
  // Driver of each gate input pin; empty until connected.
  std::vector<std::optional<Pin>> fanin;
  // Signal name of each output pin.
  std::vector<std::string> names;

  unsigned n_pins() const { return static_cast<unsigned>(names.size()); }
};

struct OutputPort {
  std::string name;
  std::optional<Pin> driver;
};

// Combinational netlist of gate instances and constant sources. Built
// incrementally; `validate()` checks the structural invariants:
//  - the wire graph is acyclic,
//  - every gate input pin and primary output has a driver,
//  - every gate output pin is consumed, a primary output, or garbage,
//    and garbage pins are never consumed.
// Signal names are unique across the circuit.
class Circuit {
 public:
  explicit Circuit(std::string name = "circuit") : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Pin add_input(std::string name);
  // Empty names are replaced by fresh ones.
  Pin add_constant(bool value, std::string name = {});
  NodeId add_gate(GateRef gate, std::vector<std::optional<Pin>> fanin = {},
                  std::vector<std::string> pin_names = {});
  void connect(NodeId node, unsigned input_pin, Pin driver);
  void add_output(std::string name, std::optional<Pin> driver = std::nullopt);
  void drive_output(std::size_t index, Pin driver);
  void mark_garbage(Pin pin);
  // Renames the signal on `pin`; the new name must be unused.
  void rename(Pin pin, std::string name);

  // Copies `sub` into this circuit with fresh names, feeding its primary
  // inputs from `inputs`. Returns the pins carrying sub's primary outputs.
  // Sub's garbage becomes garbage here.
  std::vector<Pin> splice(const Circuit& sub, std::span<const Pin> inputs);

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<NodeId>& inputs() const { return inputs_; }
  const std::vector<OutputPort>& outputs() const { return outputs_; }
  const std::vector<Pin>& garbage() const { return garbage_; }
  std::size_t n_inputs() const { return inputs_.size(); }
  std::size_t n_outputs() const { return outputs_.size(); }

  const std::string& pin_name(Pin p) const;
  std::optional<Pin> find_signal(std::string_view name) const;
  std::string fresh_name(std::string_view stem = "n");

  std::size_t gate_count() const;
  std::size_t constant_count() const;

  // Throws a ValidationError subclass on the first violated invariant;
  // returns the nodes in a topological order otherwise.
  std::vector<NodeId> validate() const;

  // Same nodes, wiring, names, ports and garbage. Gate instances compare by
  // gate name and table.
  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  void claim_name(const std::string& name, Pin pin);

  std::string name_;
  std::vector<Node> nodes_;
  std::vector<NodeId> inputs_;
  std::vector<OutputPort> outputs_;
  std::vector<Pin> garbage_;
  std::unordered_map<std::string, Pin> by_name_;
  std::uint64_t next_fresh_ = 0;
};

// Values of every named signal for one input word, in evaluation order.
struct SimTrace {
  std::vector<std::pair<std::string, bool>> assignment;

  // One `pin=bit` line per signal.
  std::string dump() const;
};

// Evaluates a validated circuit repeatedly. Input word bit layout follows
// gates: the first primary input is the most significant bit, and likewise
// for outputs.
class Simulator {
 public:
  explicit Simulator(const Circuit& c);

  std::uint64_t run(std::uint64_t x, SimTrace* trace = nullptr) const;

 private:
  const Circuit& circuit_;
  std::vector<NodeId> order_;
  std::vector<std::size_t> offset_;
  std::size_t n_values_ = 0;
};

std::uint64_t simulate(const Circuit& c, std::uint64_t x,
                       SimTrace* trace = nullptr);

// Row r = simulate(c, r). Throws TooWideError above 16 inputs or outputs.
Gate truth_table_of(const Circuit& c);

struct EquivalenceResult {
  bool equivalent = true;
  // Smallest differing input word.
  std::optional<std::uint64_t> counterexample;
};

EquivalenceResult check_equivalence(const Circuit& a, const Circuit& b);
EquivalenceResult check_equivalence(const Circuit& a, const Gate& b);

}  // namespace onegate

#endif  // ONEGATE_CIRCUIT_H_

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

#include "onegate/circuit.h"

#include <sstream>

#include "onegate/errors.h"

namespace onegate {

void Circuit::claim_name(const std::string& name, Pin pin) {
  if (!is_identifier(name)) {
    throw DomainError("invalid signal name '" + name + "'");
  }
  if (!by_name_.emplace(name, pin).second) {
    throw DuplicateNameError("signal '" + name + "' defined twice");
  }
}

std::string Circuit::fresh_name(std::string_view stem) {
  for (;;) {
    std::string candidate =
        "$" + std::string(stem) + std::to_string(next_fresh_++);
    if (!by_name_.contains(candidate)) return candidate;
  }
}

Pin Circuit::add_input(std::string name) {
  const auto id = static_cast<NodeId>(nodes_.size());
  claim_name(name, Pin{id, 0});
  Node node;
  node.kind = NodeKind::kInput;
  node.names.push_back(std::move(name));
  nodes_.push_back(std::move(node));
  inputs_.push_back(id);
  return Pin{id, 0};
}

Pin Circuit::add_constant(bool value, std::string name) {
  const auto id = static_cast<NodeId>(nodes_.size());
  if (name.empty()) name = fresh_name("k");
  claim_name(name, Pin{id, 0});
  Node node;
  node.kind = NodeKind::kConstant;
  node.value = value;
  node.names.push_back(std::move(name));
  nodes_.push_back(std::move(node));
  return Pin{id, 0};
}

NodeId Circuit::add_gate(GateRef gate, std::vector<std::optional<Pin>> fanin,
                         std::vector<std::string> pin_names) {
  if (!gate) throw DomainError("null gate");
  const auto id = static_cast<NodeId>(nodes_.size());
  if (fanin.size() > gate->n_inputs()) {
    throw ArityMismatchError("gate '" + gate->name() + "' has only " +
                             std::to_string(gate->n_inputs()) + " inputs");
  }
  fanin.resize(gate->n_inputs());
  if (pin_names.empty()) {
    const std::string stem = fresh_name("g");
    for (unsigned i = 0; i < gate->n_outputs(); ++i) {
      pin_names.push_back(stem + "." + std::to_string(i));
    }
  }
  if (pin_names.size() != gate->n_outputs()) {
    throw ArityMismatchError("gate '" + gate->name() + "' has " +
                             std::to_string(gate->n_outputs()) + " outputs");
  }
  for (unsigned i = 0; i < pin_names.size(); ++i) {
    claim_name(pin_names[i], Pin{id, i});
  }
  Node node;
  node.kind = NodeKind::kGate;
  node.gate = std::move(gate);
  node.fanin = std::move(fanin);
  node.names = std::move(pin_names);
  nodes_.push_back(std::move(node));
  return id;
}

void Circuit::connect(NodeId node, unsigned input_pin, Pin driver) {
  if (node >= nodes_.size() || nodes_[node].kind != NodeKind::kGate) {
    throw DomainError("connect: not a gate instance");
  }
  auto& fanin = nodes_[node].fanin;
  if (input_pin >= fanin.size()) throw DomainError("connect: no such pin");
  fanin[input_pin] = driver;
}

void Circuit::add_output(std::string name, std::optional<Pin> driver) {
  if (!is_identifier(name)) {
    throw DomainError("invalid output name '" + name + "'");
  }
  for (const auto& port : outputs_) {
    if (port.name == name) {
      throw DuplicateNameError("output '" + name + "' declared twice");
    }
  }
  outputs_.push_back(OutputPort{std::move(name), driver});
}

void Circuit::drive_output(std::size_t index, Pin driver) {
  if (index >= outputs_.size()) throw DomainError("no such output");
  outputs_[index].driver = driver;
}

void Circuit::mark_garbage(Pin pin) { garbage_.push_back(pin); }

void Circuit::rename(Pin pin, std::string name) {
  std::string& current = nodes_.at(pin.node).names.at(pin.index);
  if (current == name) return;
  claim_name(name, pin);
  by_name_.erase(current);
  current = std::move(name);
}

std::vector<Pin> Circuit::splice(const Circuit& sub,
                                 std::span<const Pin> inputs) {
  if (inputs.size() != sub.n_inputs()) {
    throw ArityMismatchError("splice of '" + sub.name() + "' needs " +
                             std::to_string(sub.n_inputs()) + " inputs, got " +
                             std::to_string(inputs.size()));
  }
  std::vector<NodeId> map(sub.nodes().size());
  for (std::size_t k = 0; k < sub.inputs().size(); ++k) {
    map[sub.inputs()[k]] = inputs[k].node;
  }
  auto translate = [&](Pin p) {
    const Node& src = sub.nodes()[p.node];
    if (src.kind == NodeKind::kInput) {
      for (std::size_t k = 0; k < sub.inputs().size(); ++k) {
        if (sub.inputs()[k] == p.node) return inputs[k];
      }
    }
    return Pin{map[p.node], p.index};
  };
  for (NodeId id = 0; id < sub.nodes().size(); ++id) {
    const Node& n = sub.nodes()[id];
    if (n.kind == NodeKind::kConstant) {
      map[id] = add_constant(n.value).node;
    } else if (n.kind == NodeKind::kGate) {
      map[id] = add_gate(n.gate);
    }
  }
  for (NodeId id = 0; id < sub.nodes().size(); ++id) {
    const Node& n = sub.nodes()[id];
    if (n.kind != NodeKind::kGate) continue;
    for (unsigned k = 0; k < n.fanin.size(); ++k) {
      if (n.fanin[k]) connect(map[id], k, translate(*n.fanin[k]));
    }
  }
  for (Pin g : sub.garbage()) mark_garbage(translate(g));
  std::vector<Pin> outs;
  for (const auto& port : sub.outputs()) {
    if (!port.driver) {
      throw DanglingPinError("splice: output '" + port.name + "' of '" +
                             sub.name() + "' is undriven");
    }
    outs.push_back(translate(*port.driver));
  }
  return outs;
}

const std::string& Circuit::pin_name(Pin p) const {
  if (p.node >= nodes_.size() || p.index >= nodes_[p.node].n_pins()) {
    throw DomainError("no such pin");
  }
  return nodes_[p.node].names[p.index];
}

std::optional<Pin> Circuit::find_signal(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t Circuit::gate_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.kind == NodeKind::kGate;
  return n;
}

std::size_t Circuit::constant_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes_) n += node.kind == NodeKind::kConstant;
  return n;
}

std::vector<NodeId> Circuit::validate() const {
  auto valid_pin = [&](Pin p) {
    return p.node < nodes_.size() && p.index < nodes_[p.node].n_pins();
  };
  std::vector<std::vector<unsigned>> uses(nodes_.size());
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    uses[id].assign(nodes_[id].n_pins(), 0);
  }
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    const Node& n = nodes_[id];
    for (unsigned k = 0; k < n.fanin.size(); ++k) {
      if (!n.fanin[k]) {
        throw DanglingPinError("input pin " + std::to_string(k + 1) +
                               " of gate instance '" + n.names.front() +
                               "' is undriven");
      }
      if (!valid_pin(*n.fanin[k])) {
        throw DanglingPinError("gate instance '" + n.names.front() +
                               "' is driven by a nonexistent pin");
      }
      ++uses[n.fanin[k]->node][n.fanin[k]->index];
    }
  }
  for (const auto& port : outputs_) {
    if (!port.driver) {
      throw DanglingPinError("output '" + port.name + "' is undriven");
    }
    if (!valid_pin(*port.driver)) {
      throw DanglingPinError("output '" + port.name +
                             "' is driven by a nonexistent pin");
    }
    ++uses[port.driver->node][port.driver->index];
  }

  // Kahn's algorithm; ties resolved by node id.
  std::vector<unsigned> pending(nodes_.size(), 0);
  std::vector<std::vector<NodeId>> succ(nodes_.size());
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    for (const auto& d : nodes_[id].fanin) {
      ++pending[id];
      succ[d->node].push_back(id);
    }
  }
  std::vector<NodeId> order;
  order.reserve(nodes_.size());
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    if (pending[id] == 0) order.push_back(id);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (NodeId s : succ[order[head]]) {
      if (--pending[s] == 0) order.push_back(s);
    }
  }
  if (order.size() != nodes_.size()) {
    for (NodeId id = 0; id < nodes_.size(); ++id) {
      if (pending[id] != 0) {
        throw CycleError("combinational cycle through '" +
                         nodes_[id].names.front() + "'");
      }
    }
  }

  std::vector<std::vector<bool>> is_garbage(nodes_.size());
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    is_garbage[id].assign(nodes_[id].n_pins(), false);
  }
  for (Pin g : garbage_) {
    if (!valid_pin(g) || nodes_[g.node].kind != NodeKind::kGate) {
      throw GarbageConflictError("garbage must name a gate output pin");
    }
    if (is_garbage[g.node][g.index]) {
      throw GarbageConflictError("pin '" + pin_name(g) +
                                 "' listed as garbage twice");
    }
    if (uses[g.node][g.index] != 0) {
      throw GarbageConflictError("garbage pin '" + pin_name(g) +
                                 "' is also wired");
    }
    is_garbage[g.node][g.index] = true;
  }
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].kind != NodeKind::kGate) continue;
    for (unsigned k = 0; k < nodes_[id].n_pins(); ++k) {
      if (uses[id][k] == 0 && !is_garbage[id][k]) {
        throw UnaccountedPinError("output pin '" + nodes_[id].names[k] +
                                  "' is neither wired nor garbage");
      }
    }
  }
  return order;
}

bool operator==(const Circuit& a, const Circuit& b) {
  if (a.inputs_ != b.inputs_ || a.garbage_ != b.garbage_ ||
      a.nodes_.size() != b.nodes_.size() ||
      a.outputs_.size() != b.outputs_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.outputs_.size(); ++i) {
    if (a.outputs_[i].name != b.outputs_[i].name ||
        a.outputs_[i].driver != b.outputs_[i].driver) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const Node& x = a.nodes_[i];
    const Node& y = b.nodes_[i];
    if (x.kind != y.kind || x.value != y.value || x.fanin != y.fanin ||
        x.names != y.names) {
      return false;
    }
    if (x.kind == NodeKind::kGate && !(*x.gate == *y.gate)) return false;
  }
  return true;
}

std::string SimTrace::dump() const {
  std::ostringstream out;
  for (const auto& [name, bit] : assignment) {
    out << name << "=" << (bit ? 1 : 0) << "\n";
  }
  return out.str();
}

Simulator::Simulator(const Circuit& c) : circuit_(c), order_(c.validate()) {
  offset_.resize(c.nodes().size());
  for (NodeId id = 0; id < c.nodes().size(); ++id) {
    offset_[id] = n_values_;
    n_values_ += c.nodes()[id].n_pins();
  }
}

std::uint64_t Simulator::run(std::uint64_t x, SimTrace* trace) const {
  const auto& nodes = circuit_.nodes();
  const std::size_t n_in = circuit_.n_inputs();
  if (n_in < 64 && (x >> n_in) != 0) {
    throw DomainError("input word out of range for " + std::to_string(n_in) +
                      "-input circuit");
  }
  std::vector<std::uint8_t> value(n_values_, 0);
  for (std::size_t k = 0; k < n_in; ++k) {
    value[offset_[circuit_.inputs()[k]]] = (x >> (n_in - 1 - k)) & 1u;
  }
  auto at = [&](Pin p) { return value[offset_[p.node] + p.index]; };
  for (NodeId id : order_) {
    const Node& n = nodes[id];
    if (n.kind == NodeKind::kConstant) {
      value[offset_[id]] = n.value;
    } else if (n.kind == NodeKind::kGate) {
      std::uint32_t word = 0;
      for (const auto& d : n.fanin) word = (word << 1) | at(*d);
      const std::uint32_t out = n.gate->table()[word];
      const unsigned m = n.gate->n_outputs();
      for (unsigned k = 0; k < m; ++k) {
        value[offset_[id] + k] = (out >> (m - 1 - k)) & 1u;
      }
    }
    if (trace) {
      for (unsigned k = 0; k < n.n_pins(); ++k) {
        trace->assignment.emplace_back(n.names[k], value[offset_[id] + k]);
      }
    }
  }
  std::uint64_t result = 0;
  for (const auto& port : circuit_.outputs()) {
    result = (result << 1) | at(*port.driver);
  }
  return result;
}

std::uint64_t simulate(const Circuit& c, std::uint64_t x, SimTrace* trace) {
  return Simulator(c).run(x, trace);
}

Gate truth_table_of(const Circuit& c) {
  if (c.n_inputs() > kMaxGateWidth || c.n_outputs() > kMaxGateWidth) {
    throw TooWideError("circuit '" + c.name() +
                       "' exceeds 16 inputs or outputs");
  }
  Simulator sim(c);
  std::vector<std::uint32_t> table(std::size_t{1} << c.n_inputs());
  for (std::uint32_t r = 0; r < table.size(); ++r) {
    table[r] = static_cast<std::uint32_t>(sim.run(r));
  }
  return Gate(c.name(), static_cast<unsigned>(c.n_inputs()),
              static_cast<unsigned>(c.n_outputs()), std::move(table));
}

namespace {

void check_arity(std::size_t a_in, std::size_t a_out, std::size_t b_in,
                 std::size_t b_out) {
  if (a_in != b_in || a_out != b_out) {
    throw ArityMismatchError(
        "cannot compare " + std::to_string(a_in) + "->" +
        std::to_string(a_out) + " with " + std::to_string(b_in) + "->" +
        std::to_string(b_out));
  }
  if (a_in > kMaxGateWidth) {
    throw TooWideError("exhaustive comparison limited to 16 inputs");
  }
}

}  // namespace

EquivalenceResult check_equivalence(const Circuit& a, const Circuit& b) {
  check_arity(a.n_inputs(), a.n_outputs(), b.n_inputs(), b.n_outputs());
  Simulator sa(a), sb(b);
  const std::uint64_t rows = std::uint64_t{1} << a.n_inputs();
  for (std::uint64_t x = 0; x < rows; ++x) {
    if (sa.run(x) != sb.run(x)) return {false, x};
  }
  return {};
}

EquivalenceResult check_equivalence(const Circuit& a, const Gate& b) {
  check_arity(a.n_inputs(), a.n_outputs(), b.n_inputs(), b.n_outputs());
  Simulator sa(a);
  for (std::uint32_t x = 0; x < b.rows(); ++x) {
    if (sa.run(x) != b.table()[x]) return {false, x};
  }
  return {};
}

}  // namespace onegate

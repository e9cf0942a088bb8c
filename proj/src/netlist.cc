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

#include "onegate/netlist.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "onegate/errors.h"

namespace onegate {

std::string_view to_string(Op op) {
  switch (op) {
    case Op::kAnd:
      return "AND";
    case Op::kOr:
      return "OR";
    case Op::kNot:
      return "NOT";
    case Op::kConst0:
      return "CONST0";
    case Op::kConst1:
      return "CONST1";
  }
  return "?";
}

const GateRef& builtin_gate(Op op) {
  static const GateRef kAnd =
      std::make_shared<const Gate>("AND", 2, 1, std::vector<std::uint32_t>{0, 0, 0, 1});
  static const GateRef kOr =
      std::make_shared<const Gate>("OR", 2, 1, std::vector<std::uint32_t>{0, 1, 1, 1});
  static const GateRef kNot =
      std::make_shared<const Gate>("NOT", 1, 1, std::vector<std::uint32_t>{1, 0});
  switch (op) {
    case Op::kAnd:
      return kAnd;
    case Op::kOr:
      return kOr;
    case Op::kNot:
      return kNot;
    default:
      throw DomainError("constants are not gates");
  }
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::optional<Op> op_from(std::string_view s) {
  if (s == "AND") return Op::kAnd;
  if (s == "OR") return Op::kOr;
  if (s == "NOT") return Op::kNot;
  if (s == "CONST0") return Op::kConst0;
  if (s == "CONST1") return Op::kConst1;
  return std::nullopt;
}

unsigned arity(Op op) {
  switch (op) {
    case Op::kAnd:
    case Op::kOr:
      return 2;
    case Op::kNot:
      return 1;
    default:
      return 0;
  }
}

bool is_reserved(std::string_view s) {
  return op_from(s).has_value() || s == "input" || s == "output" ||
         s == "gatedef" || s == "gatecopy" || s == "garbage";
}

void expect_name(const std::string& tok, std::size_t line) {
  if (!is_identifier(tok) || is_reserved(tok)) {
    throw ParseError(line, "invalid name '" + tok + "'");
  }
}

Statement parse_statement(const Line& line) {
  const auto& t = line.tokens;
  if (t.size() < 3 || t[1] != "=") {
    throw ParseError(line.number, "expected '<name> = <op> <operands>'");
  }
  expect_name(t[0], line.number);
  const auto op = op_from(t[2]);
  if (!op) throw ParseError(line.number, "unknown operator '" + t[2] + "'");
  if (t.size() - 3 != arity(*op)) {
    throw ParseError(line.number, std::string(to_string(*op)) + " takes " +
                                      std::to_string(arity(*op)) +
                                      " operand(s)");
  }
  Statement s{t[0], *op, {t.begin() + 3, t.end()}, line.number};
  for (const auto& operand : s.operands) expect_name(operand, line.number);
  return s;
}

bool is_lowered_keyword(const std::string& tok) {
  return tok == "gatedef" || tok == "gatecopy" || tok == "garbage";
}

}  // namespace

SourceNetlist parse_netlist(std::string_view text) {
  SourceNetlist src;
  std::unordered_set<std::string> defined;
  std::vector<std::pair<std::string, std::size_t>> outputs;
  for (const Line& line : tokenize(text)) {
    const auto& head = line.tokens.front();
    if (head == "input") {
      if (line.tokens.size() < 2) {
        throw ParseError(line.number, "input declares no names");
      }
      for (auto it = line.tokens.begin() + 1; it != line.tokens.end(); ++it) {
        expect_name(*it, line.number);
        if (!defined.insert(*it).second) {
          throw SemanticError(line.number, "'" + *it + "' defined twice");
        }
        src.inputs.push_back(*it);
      }
    } else if (head == "output") {
      if (line.tokens.size() < 2) {
        throw ParseError(line.number, "output declares no names");
      }
      for (auto it = line.tokens.begin() + 1; it != line.tokens.end(); ++it) {
        expect_name(*it, line.number);
        if (std::find(src.outputs.begin(), src.outputs.end(), *it) !=
            src.outputs.end()) {
          throw SemanticError(line.number,
                              "output '" + *it + "' declared twice");
        }
        src.outputs.push_back(*it);
        outputs.emplace_back(*it, line.number);
      }
    } else if (is_lowered_keyword(head)) {
      throw ParseError(line.number,
                       "'" + head + "' is not allowed in a source netlist");
    } else {
      Statement s = parse_statement(line);
      for (const auto& operand : s.operands) {
        if (!defined.contains(operand)) {
          throw SemanticError(line.number,
                              "'" + operand + "' used before definition");
        }
      }
      if (!defined.insert(s.target).second) {
        throw SemanticError(line.number,
                            "'" + s.target + "' assigned twice");
      }
      src.statements.push_back(std::move(s));
    }
  }
  for (const auto& [name, number] : outputs) {
    if (!defined.contains(name)) {
      throw SemanticError(number, "output '" + name + "' is never assigned");
    }
  }
  return src;
}

namespace {

// Statements resolved to value slots: inputs first, then targets.
struct CompiledNetlist {
  struct Step {
    Op op;
    std::size_t a = 0, b = 0;
  };
  std::vector<Step> steps;
  std::vector<std::size_t> outputs;
  std::size_t n_inputs = 0;

  explicit CompiledNetlist(const SourceNetlist& src) {
    std::unordered_map<std::string, std::size_t> slot;
    for (const auto& in : src.inputs) slot.emplace(in, slot.size());
    n_inputs = src.inputs.size();
    for (const auto& s : src.statements) {
      Step step{s.op};
      if (!s.operands.empty()) step.a = slot.at(s.operands[0]);
      if (s.operands.size() > 1) step.b = slot.at(s.operands[1]);
      steps.push_back(step);
      slot.emplace(s.target, slot.size());
    }
    for (const auto& out : src.outputs) outputs.push_back(slot.at(out));
  }

  std::uint64_t run(std::uint64_t x) const {
    std::vector<std::uint8_t> v(n_inputs + steps.size());
    for (std::size_t k = 0; k < n_inputs; ++k) {
      v[k] = (x >> (n_inputs - 1 - k)) & 1u;
    }
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const Step& s = steps[k];
      std::uint8_t r = 0;
      switch (s.op) {
        case Op::kAnd:
          r = v[s.a] & v[s.b];
          break;
        case Op::kOr:
          r = v[s.a] | v[s.b];
          break;
        case Op::kNot:
          r = v[s.a] ^ 1u;
          break;
        case Op::kConst0:
          r = 0;
          break;
        case Op::kConst1:
          r = 1;
          break;
      }
      v[n_inputs + k] = r;
    }
    std::uint64_t y = 0;
    for (std::size_t o : outputs) y = (y << 1) | v[o];
    return y;
  }
};

}  // namespace

std::uint64_t evaluate_netlist(const SourceNetlist& src, std::uint64_t x) {
  return CompiledNetlist(src).run(x);
}

Gate reference_table(const SourceNetlist& src, std::string name) {
  if (src.inputs.size() > kMaxGateWidth || src.outputs.size() > kMaxGateWidth) {
    throw TooWideError("netlist exceeds 16 inputs or outputs");
  }
  const CompiledNetlist compiled(src);
  std::vector<std::uint32_t> table(std::size_t{1} << src.inputs.size());
  for (std::uint32_t r = 0; r < table.size(); ++r) {
    table[r] = static_cast<std::uint32_t>(compiled.run(r));
  }
  return Gate(std::move(name), static_cast<unsigned>(src.inputs.size()),
              static_cast<unsigned>(src.outputs.size()), std::move(table));
}

namespace {

unsigned parse_small(const std::string& tok, std::size_t line) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line, "expected a count, got '" + tok + "'");
  }
  return v;
}

GateRef parse_gatedef(const Line& line) {
  const auto& t = line.tokens;
  if (t.size() < 4) {
    throw ParseError(line.number, "expected 'gatedef <gate> <n> <m> <row>...'");
  }
  if (!is_identifier(t[1])) throw ParseError(line.number, "bad gate name");
  const unsigned n = parse_small(t[2], line.number);
  const unsigned m = parse_small(t[3], line.number);
  if (n > kMaxGateWidth || m < 1 || m > kMaxGateWidth) {
    throw ParseError(line.number, "gate size out of range");
  }
  if (t.size() - 4 != (std::size_t{1} << n)) {
    throw ParseError(line.number, "gatedef needs " +
                                      std::to_string(std::size_t{1} << n) +
                                      " rows");
  }
  std::vector<std::uint32_t> table;
  for (auto it = t.begin() + 4; it != t.end(); ++it) {
    if (it->size() != m ||
        it->find_first_not_of("01") != std::string::npos) {
      throw ParseError(line.number, "bad gatedef row '" + *it + "'");
    }
    std::uint32_t w = 0;
    for (char c : *it) w = (w << 1) | static_cast<std::uint32_t>(c == '1');
    table.push_back(w);
  }
  return std::make_shared<const Gate>(t[1], n, m, std::move(table));
}

// Deferred pin connection: node input `pin` is driven by signal `name`.
struct PendingWire {
  NodeId node;
  unsigned pin;
  std::string name;
  std::size_t line;
};

struct PendingOutput {
  std::string port;
  std::string signal;
  std::size_t line;
};

template <typename F>
auto at_line(std::size_t line, F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw SemanticError(line, e.what());
  } catch (const DomainError& e) {
    throw SemanticError(line, e.what());
  }
}

}  // namespace

Circuit parse_circuit(std::string_view text, std::string name) {
  Circuit c(std::move(name));
  std::map<std::string, GateRef> gates;
  std::vector<PendingWire> wires;
  std::vector<PendingOutput> outputs;
  std::vector<std::pair<std::string, std::size_t>> garbage;
  std::vector<NodeId> primitives;

  for (const Line& line : tokenize(text)) {
    const auto& t = line.tokens;
    const auto& head = t.front();
    if (head == "input") {
      for (auto it = t.begin() + 1; it != t.end(); ++it) {
        expect_name(*it, line.number);
        at_line(line.number, [&] { return c.add_input(*it); });
      }
    } else if (head == "output") {
      for (auto it = t.begin() + 1; it != t.end(); ++it) {
        std::string port = *it, signal = *it;
        if (auto eq = it->find('='); eq != std::string::npos) {
          port = it->substr(0, eq);
          signal = it->substr(eq + 1);
        }
        expect_name(port, line.number);
        expect_name(signal, line.number);
        outputs.push_back({port, signal, line.number});
      }
    } else if (head == "gatedef") {
      GateRef g = parse_gatedef(line);
      if (is_reserved(g->name())) {
        throw SemanticError(line.number, "gate name '" + g->name() +
                                             "' is reserved");
      }
      if (!gates.emplace(g->name(), g).second) {
        throw SemanticError(line.number,
                            "gate '" + g->name() + "' defined twice");
      }
    } else if (head == "gatecopy") {
      auto arrow = std::find(t.begin(), t.end(), "->");
      if (t.size() < 2 || arrow == t.end()) {
        throw ParseError(line.number,
                         "expected 'gatecopy <gate> <in>... -> <out>...'");
      }
      auto g = gates.find(t[1]);
      if (g == gates.end()) {
        throw SemanticError(line.number, "unknown gate '" + t[1] + "'");
      }
      std::vector<std::string> ins(t.begin() + 2, arrow);
      std::vector<std::string> outs(arrow + 1, t.end());
      if (ins.size() != g->second->n_inputs() ||
          outs.size() != g->second->n_outputs()) {
        throw SemanticError(line.number,
                            "gatecopy pin count does not match gate '" +
                                t[1] + "'");
      }
      for (const auto& s : ins) expect_name(s, line.number);
      for (const auto& s : outs) expect_name(s, line.number);
      const NodeId id = at_line(line.number, [&] {
        return c.add_gate(g->second, {}, outs);
      });
      for (unsigned k = 0; k < ins.size(); ++k) {
        wires.push_back({id, k, ins[k], line.number});
      }
    } else if (head == "garbage") {
      for (auto it = t.begin() + 1; it != t.end(); ++it) {
        garbage.emplace_back(*it, line.number);
      }
    } else {
      const Statement s = parse_statement(line);
      if (s.op == Op::kConst0 || s.op == Op::kConst1) {
        at_line(line.number, [&] {
          return c.add_constant(s.op == Op::kConst1, s.target);
        });
        continue;
      }
      const NodeId id = at_line(line.number, [&] {
        return c.add_gate(builtin_gate(s.op), {}, {s.target});
      });
      primitives.push_back(id);
      for (unsigned k = 0; k < s.operands.size(); ++k) {
        wires.push_back({id, k, s.operands[k], line.number});
      }
    }
  }

  auto resolve = [&](const std::string& signal, std::size_t line) {
    auto pin = c.find_signal(signal);
    if (!pin) throw SemanticError(line, "undefined signal '" + signal + "'");
    return *pin;
  };
  for (const auto& w : wires) c.connect(w.node, w.pin, resolve(w.name, w.line));
  for (const auto& o : outputs) {
    at_line(o.line, [&] {
      c.add_output(o.port, resolve(o.signal, o.line));
      return 0;
    });
  }
  for (const auto& [signal, line] : garbage) {
    c.mark_garbage(resolve(signal, line));
  }

  std::set<NodeId> consumed;
  for (const auto& node : c.nodes()) {
    for (const auto& d : node.fanin) {
      if (d) consumed.insert(d->node);
    }
  }
  for (const auto& port : c.outputs()) consumed.insert(port.driver->node);
  for (Pin g : c.garbage()) consumed.insert(g.node);
  for (NodeId id : primitives) {
    if (!consumed.contains(id)) c.mark_garbage(Pin{id, 0});
  }
  return c;
}

Circuit to_circuit(const SourceNetlist& src, std::string name) {
  Circuit c(std::move(name));
  for (const auto& in : src.inputs) c.add_input(in);
  std::vector<NodeId> primitives;
  std::set<std::string> consumed;
  for (const auto& s : src.statements) {
    for (const auto& o : s.operands) consumed.insert(o);
    if (s.op == Op::kConst0 || s.op == Op::kConst1) {
      c.add_constant(s.op == Op::kConst1, s.target);
      continue;
    }
    std::vector<std::optional<Pin>> fanin;
    for (const auto& o : s.operands) fanin.push_back(c.find_signal(o));
    primitives.push_back(c.add_gate(builtin_gate(s.op), fanin, {s.target}));
  }
  for (const auto& out : src.outputs) {
    consumed.insert(out);
    c.add_output(out, c.find_signal(out));
  }
  for (NodeId id : primitives) {
    if (!consumed.contains(c.nodes()[id].names[0])) {
      c.mark_garbage(Pin{id, 0});
    }
  }
  return c;
}

namespace {

std::optional<Op> builtin_op(const Gate& g) {
  for (Op op : {Op::kAnd, Op::kOr, Op::kNot}) {
    if (*builtin_gate(op) == g) return op;
  }
  return std::nullopt;
}

}  // namespace

std::string emit_netlist(const Circuit& c) {
  c.validate();
  std::ostringstream out;
  if (c.n_inputs() > 0) {
    out << "input";
    for (NodeId id : c.inputs()) out << " " << c.nodes()[id].names[0];
    out << "\n";
  }

  std::map<std::string, const Gate*> defined;
  for (const auto& node : c.nodes()) {
    if (node.kind != NodeKind::kGate || builtin_op(*node.gate)) continue;
    auto [it, fresh] = defined.emplace(node.gate->name(), node.gate.get());
    if (!fresh) {
      if (!(*it->second == *node.gate)) {
        throw DomainError("two different gates named '" + node.gate->name() +
                          "'");
      }
      continue;
    }
    out << "gatedef " << node.gate->name() << " " << node.gate->n_inputs()
        << " " << node.gate->n_outputs();
    for (std::uint32_t w : node.gate->table()) {
      out << " " << to_bits(w, node.gate->n_outputs());
    }
    out << "\n";
  }

  for (const auto& node : c.nodes()) {
    if (node.kind == NodeKind::kConstant) {
      out << node.names[0] << " = " << (node.value ? "CONST1" : "CONST0")
          << "\n";
    } else if (node.kind == NodeKind::kGate) {
      if (auto op = builtin_op(*node.gate)) {
        out << node.names[0] << " = " << to_string(*op);
        for (const auto& d : node.fanin) out << " " << c.pin_name(*d);
        out << "\n";
        continue;
      }
      out << "gatecopy " << node.gate->name();
      for (const auto& d : node.fanin) out << " " << c.pin_name(*d);
      out << " ->";
      for (const auto& n : node.names) out << " " << n;
      out << "\n";
    }
  }

  if (c.n_outputs() > 0) {
    out << "output";
    for (const auto& port : c.outputs()) {
      const std::string& signal = c.pin_name(*port.driver);
      out << " " << port.name;
      if (signal != port.name) out << "=" << signal;
    }
    out << "\n";
  }
  if (!c.garbage().empty()) {
    out << "garbage";
    for (Pin g : c.garbage()) out << " " << c.pin_name(g);
    out << "\n";
  }
  return out.str();
}

}  // namespace onegate

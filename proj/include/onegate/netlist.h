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

#ifndef ONEGATE_NETLIST_H_
#define ONEGATE_NETLIST_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "onegate/circuit.h"
#include "onegate/gate.h"

namespace onegate {

enum class Op { kAnd, kOr, kNot, kConst0, kConst1 };

std::string_view to_string(Op op);

struct Statement {
  std::string target;
  Op op = Op::kConst0;
  std::vector<std::string> operands;
  std::size_t line = 0;

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.target == b.target && a.op == b.op && a.operands == b.operands;
  }
};

// Boolean netlist over AND, OR, NOT and constants. Every operand is an input
// or an earlier target; every name is assigned once; every output is
// defined.
struct SourceNetlist {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<Statement> statements;

  friend bool operator==(const SourceNetlist&, const SourceNetlist&) = default;
};

// Line-oriented grammar:
//   input <name>...
//   output <name>...
//   <name> = AND <a> <b> | OR <a> <b> | NOT <a> | CONST0 | CONST1
// `#` starts a comment. Throws ParseError or SemanticError.
SourceNetlist parse_netlist(std::string_view text);

// Direct evaluation of the statements; first input / output is the most
// significant bit.
std::uint64_t evaluate_netlist(const SourceNetlist& src, std::uint64_t x);

// Tabulates evaluate_netlist. Throws TooWideError above 16 inputs/outputs.
Gate reference_table(const SourceNetlist& src, std::string name = "reference");

// The two-input AND/OR and one-input NOT gates that primitive statements
// denote inside a Circuit.
const GateRef& builtin_gate(Op op);

// Full grammar: the source statements plus
//   gatedef <gate> <n> <m> <row>...
//   gatecopy <gate> <in>... -> <out>...
//   garbage <pin>...
//   output <port>=<signal>
// Primitive statements become builtin gate instances; their unused outputs
// are marked garbage. Operands may refer forward. The result is not
// validated.
Circuit parse_circuit(std::string_view text, std::string name = "circuit");

Circuit to_circuit(const SourceNetlist& src, std::string name = "circuit");

// Text form accepted by parse_circuit; validates `c` first.
std::string emit_netlist(const Circuit& c);

}  // namespace onegate

#endif  // ONEGATE_NETLIST_H_

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

#ifndef ONEGATE_GATE_H_
#define ONEGATE_GATE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace onegate {

inline constexpr unsigned kMaxGateWidth = 16;

// Output words of an n-input, m-output binary function. Row r holds the
// outputs for the input word r; input x1 is the most significant bit of r
// and output x'1 the most significant bit of the stored word.
class Gate {
 public:
  // Throws DomainError when the table does not describe a valid gate.
  Gate(std::string name, unsigned n_inputs, unsigned n_outputs,
       std::vector<std::uint32_t> table);

  const std::string& name() const { return name_; }
  unsigned n_inputs() const { return n_inputs_; }
  unsigned n_outputs() const { return n_outputs_; }
  std::size_t rows() const { return table_.size(); }
  const std::vector<std::uint32_t>& table() const { return table_; }

  // Bit of output `out` (0-based, x'1 is 0) in row `row`.
  bool output_bit(std::uint32_t row, unsigned out) const {
    return (table_[row] >> (n_outputs_ - 1 - out)) & 1u;
  }

  // Same table, name ignored.
  bool same_function(const Gate& other) const {
    return n_inputs_ == other.n_inputs_ && n_outputs_ == other.n_outputs_ &&
           table_ == other.table_;
  }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  std::string name_;
  unsigned n_inputs_;
  unsigned n_outputs_;
  std::vector<std::uint32_t> table_;
};

using GateRef = std::shared_ptr<const Gate>;

// Single-output truth table; entry r is the value at input word r, first
// variable most significant. Size is always a power of two.
using Column = std::vector<std::uint8_t>;

// Number of variables of a column; throws DomainError if the size is not a
// power of two.
unsigned column_vars(const Column& col);

// Column of output `out`.
Column output_column(const Gate& g, unsigned out);

// Column of input `in`, i.e. the projection x_in.
Column input_column(unsigned n_inputs, unsigned in);

// a0 + a1 x1 + ... + an xn over GF(2).
struct AffineForm {
  bool a0 = false;
  std::vector<bool> coeffs;

  bool evaluate(std::uint32_t word) const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

// Exact affine fit of a column, or nullopt. Any returned form has been
// checked against every row.
std::optional<AffineForm> fit_affine(const Column& col);

struct GateClass {
  bool affine = false;
  bool injective = false;
  bool one_to_one = false;
  bool wire_permutation = false;
  bool balanced_columns = false;

  friend bool operator==(const GateClass&, const GateClass&) = default;
};

GateClass classify(const Gate& g);

// Some inputs held at constants, the rest free. Indices are 0-based.
struct Restriction {
  std::map<unsigned, bool> fixed;
  std::vector<unsigned> free;

  // Frees `free_inputs` and fixes every other input of an n-input gate from
  // `fixing`, whose most significant bit goes to the lowest fixed index.
  static Restriction from_fixing(unsigned n_inputs,
                                 std::vector<unsigned> free_inputs,
                                 std::uint32_t fixing);

  // Throws DomainError unless fixed and free partition {0..n-1} and free is
  // nonempty.
  void validate(unsigned n_inputs) const;

  // Full input word for free-input word `w` (free[0] most significant).
  std::uint32_t merge(unsigned n_inputs, std::uint32_t w) const;

  friend bool operator==(const Restriction&, const Restriction&) = default;
};

// Output `out` of `g` under `r`, tabulated over the free inputs.
Column restrict(const Gate& g, const Restriction& r, unsigned out);

// Throws DomainError if x >= 2^n.
std::uint32_t evaluate(const Gate& g, std::uint32_t x);

// .tt text format.
Gate parse_truth_table(std::istream& in);
Gate parse_truth_table(std::string_view text);
std::string emit_truth_table(const Gate& g);

// Identifier rule shared by gate names and netlist signals.
bool is_identifier(std::string_view s);

// Formats the low `width` bits of `word`, most significant first.
std::string to_bits(std::uint64_t word, unsigned width);

}  // namespace onegate

#endif  // ONEGATE_GATE_H_

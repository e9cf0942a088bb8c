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

#ifndef ONEGATE_BASIS_H_
#define ONEGATE_BASIS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "onegate/gadget.h"
#include "onegate/gate.h"

namespace onegate {

// A restriction to two free inputs under which one output is non-affine.
struct TwoInputCore {
  Restriction restriction;
  unsigned output = 0;
  Column function;

  friend bool operator==(const TwoInputCore&, const TwoInputCore&) = default;
};

// Every non-affine two-input function is out ^ ((a ^ s) & (b ^ t)) for one
// choice of (s, t, out). AND follows by inverting the legs whose flag is
// set; OR by inverting the legs whose flag is clear.
struct CoreForm {
  std::uint8_t code;  // f(00) f(01) f(10) f(11), f(00) most significant
  const char* name;
  bool s;
  bool t;
  bool out;
};

inline constexpr std::array<CoreForm, 8> kNonAffineCores = {{
    {0b0001, "a&b", false, false, false},
    {0b0010, "a&~b", false, true, false},
    {0b0100, "~a&b", true, false, false},
    {0b1000, "~a&~b", true, true, false},
    {0b1110, "~(a&b)", false, false, true},
    {0b1101, "~a|b", false, true, true},
    {0b1011, "a|~b", true, false, true},
    {0b0111, "a|b", true, true, true},
}};

// 4-bit code of a two-input column.
std::uint8_t function_code(const Column& col);

// Entry of kNonAffineCores for `col`, or nullptr if col is affine.
const CoreForm* find_core_form(const Column& col);

// Number of NOT gadgets needed to turn the core into `kind` (AND or OR).
unsigned inversion_cost(const CoreForm& form, GadgetKind kind);

// How ties between candidate cores are broken.
enum class CoreTarget {
  kFirst,  // first hit in (pair, fixing, output) order
  kAnd,    // fewest NOTs to reach AND, then first hit
  kOr,     // fewest NOTs to reach OR, then first hit
};

// Searches input pairs (lexicographic), fixings of the remaining inputs
// (ascending), then outputs (ascending). Absent iff the gate is affine.
std::optional<TwoInputCore> find_two_input_core(
    const Gate& g, CoreTarget target = CoreTarget::kAnd);

// Single-input searches walk the varied input from the last (least
// significant) to the first, then fixings of the other inputs ascending,
// then outputs ascending.

// Throws TrivialGateError if no restriction yields NOT.
Gadget extract_not(const GateRef& g);

// Throws NoFanoutError if no restriction drives two outputs with the varied
// input. Complemented legs are corrected with `not_gadget`.
Gadget extract_fanout(const GateRef& g, const Gadget& not_gadget);

// Builds the AND or OR gadget from a non-affine core. Throws
// CoreNotNonAffine if the core function is affine.
Gadget derive_from_core(const GateRef& g, const TwoInputCore& core,
                        const Gadget& not_gadget, GadgetKind kind);

// AND and OR from one core.
std::pair<Gadget, Gadget> derive_and_or(const GateRef& g,
                                        const TwoInputCore& core,
                                        const Gadget& not_gadget);

struct BasisOptions {
  // Accept injective gates that are not one-to-one, using this NOT.
  std::optional<Gadget> external_not;
};

struct BasisKit {
  GateRef source;
  Gadget not_g;
  Gadget and_g;
  Gadget or_g;
  Gadget fanout_g;

  const Gadget& get(GadgetKind kind) const;
};

// Throws ClassificationError for affine or non-bijective gates (unless an
// external NOT is supplied for an injective gate).
BasisKit extract_basis(const GateRef& g, const BasisOptions& options = {});

// One line: fixed pins, logical pins (1-based, '~' marks an inverted leg),
// copies and garbage.
std::string binding_summary(const Gadget& g);

// Multi-line text report of a kit.
std::string describe_kit(const BasisKit& kit);

}  // namespace onegate

#endif  // ONEGATE_BASIS_H_

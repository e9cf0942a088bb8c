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

#ifndef ONEGATE_LOWER_H_
#define ONEGATE_LOWER_H_

#include <cstddef>

#include "onegate/basis.h"
#include "onegate/circuit.h"
#include "onegate/netlist.h"

namespace onegate {

struct LoweringReport {
  std::size_t gate_copies = 0;
  std::size_t fanouts_inserted = 0;
  std::size_t constant_sources = 0;
  std::size_t garbage_outputs = 0;

  friend bool operator==(const LoweringReport&, const LoweringReport&) = default;
};

struct LoweringResult {
  Circuit circuit;
  LoweringReport report;
};

// Replaces each statement with a fresh copy of the matching kit gadget and
// feeds every signal consumed d > 1 times through a chain of d - 1 FANOUT
// gadgets. The result is checked against direct evaluation of `src` before
// it is returned; a mismatch throws EquivalenceFailure.
LoweringResult lower_to_basis(const SourceNetlist& src, const BasisKit& kit);

}  // namespace onegate

#endif  // ONEGATE_LOWER_H_

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

#include "onegate/basis.h"

#include <algorithm>
#include <sstream>

#include "onegate/errors.h"

namespace onegate {

std::uint8_t function_code(const Column& col) {
  if (col.size() != 4) throw DomainError("not a two-input column");
  return static_cast<std::uint8_t>((col[0] << 3) | (col[1] << 2) |
                                   (col[2] << 1) | col[3]);
}

const CoreForm* find_core_form(const Column& col) {
  const std::uint8_t code = function_code(col);
  for (const auto& form : kNonAffineCores) {
    if (form.code == code) return &form;
  }
  return nullptr;
}

unsigned inversion_cost(const CoreForm& form, GadgetKind kind) {
  const unsigned set = unsigned{form.s} + form.t + form.out;
  switch (kind) {
    case GadgetKind::kAnd:
      return set;
    case GadgetKind::kOr:
      return 3 - set;
    default:
      throw DomainError("cores only yield AND or OR");
  }
}

std::optional<TwoInputCore> find_two_input_core(const Gate& g,
                                                CoreTarget target) {
  const unsigned n = g.n_inputs();
  if (n < 2) return std::nullopt;
  std::optional<TwoInputCore> best;
  unsigned best_cost = ~0u;
  const std::uint32_t fixings = std::uint32_t{1} << (n - 2);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i + 1; j < n; ++j) {
      for (std::uint32_t f = 0; f < fixings; ++f) {
        const Restriction r = Restriction::from_fixing(n, {i, j}, f);
        for (unsigned c = 0; c < g.n_outputs(); ++c) {
          Column col = restrict(g, r, c);
          const CoreForm* form = find_core_form(col);
          if (!form) continue;
          unsigned cost = 0;
          if (target == CoreTarget::kAnd) {
            cost = inversion_cost(*form, GadgetKind::kAnd);
          } else if (target == CoreTarget::kOr) {
            cost = inversion_cost(*form, GadgetKind::kOr);
          }
          if (cost < best_cost) {
            best_cost = cost;
            best = TwoInputCore{r, c, std::move(col)};
            if (cost == 0) return best;
          }
        }
      }
    }
  }
  return best;
}

namespace {

// Visits (varied input, restriction) in single-input search order; stops
// when `visit` returns true.
template <typename Visit>
void for_each_single_input_restriction(unsigned n, Visit&& visit) {
  if (n == 0) return;
  const std::uint32_t fixings = std::uint32_t{1} << (n - 1);
  for (unsigned j = n; j-- > 0;) {
    for (std::uint32_t f = 0; f < fixings; ++f) {
      if (visit(j, Restriction::from_fixing(n, {j}, f))) return;
    }
  }
}

bool is_identity(const Column& col) { return col[0] == 0 && col[1] == 1; }
bool is_complement(const Column& col) { return col[0] == 1 && col[1] == 0; }

}  // namespace

Gadget extract_not(const GateRef& g) {
  std::optional<PinBinding> found;
  for_each_single_input_restriction(
      g->n_inputs(), [&](unsigned j, const Restriction& r) {
        for (unsigned c = 0; c < g->n_outputs(); ++c) {
          if (is_complement(restrict(*g, r, c))) {
            found = PinBinding{g, r.fixed, {j}, {c}, {false}, {false}};
            return true;
          }
        }
        return false;
      });
  if (!found) {
    throw TrivialGateError("gate '" + g->name() +
                           "' has no restriction that inverts an input");
  }
  return build_gadget(GadgetKind::kNot, *found);
}

Gadget extract_fanout(const GateRef& g, const Gadget& not_gadget) {
  std::optional<PinBinding> found;
  for_each_single_input_restriction(
      g->n_inputs(), [&](unsigned j, const Restriction& r) {
        std::vector<unsigned> plain, inverted;
        for (unsigned c = 0; c < g->n_outputs(); ++c) {
          const Column col = restrict(*g, r, c);
          if (is_identity(col)) plain.push_back(c);
          if (is_complement(col)) inverted.push_back(c);
        }
        if (plain.size() + inverted.size() < 2) return false;
        std::vector<std::pair<unsigned, bool>> legs;
        for (unsigned c : plain) legs.emplace_back(c, false);
        for (unsigned c : inverted) legs.emplace_back(c, true);
        legs.resize(2);
        std::sort(legs.begin(), legs.end());
        found = PinBinding{g,
                           r.fixed,
                           {j},
                           {legs[0].first, legs[1].first},
                           {false},
                           {legs[0].second, legs[1].second}};
        return true;
      });
  if (!found) {
    throw NoFanoutError("gate '" + g->name() +
                        "' has no restriction driving two outputs together");
  }
  return build_gadget(GadgetKind::kFanout, *found, &not_gadget);
}

Gadget derive_from_core(const GateRef& g, const TwoInputCore& core,
                        const Gadget& not_gadget, GadgetKind kind) {
  const CoreForm* form = find_core_form(core.function);
  if (!form) throw CoreNotNonAffine("core function is affine");
  if (kind != GadgetKind::kAnd && kind != GadgetKind::kOr) {
    throw DomainError("cores only yield AND or OR");
  }
  const bool flip = kind == GadgetKind::kOr;
  PinBinding b{g,
               core.restriction.fixed,
               core.restriction.free,
               {core.output},
               {form->s != flip, form->t != flip},
               {form->out != flip}};
  return build_gadget(kind, b, &not_gadget);
}

std::pair<Gadget, Gadget> derive_and_or(const GateRef& g,
                                        const TwoInputCore& core,
                                        const Gadget& not_gadget) {
  return {derive_from_core(g, core, not_gadget, GadgetKind::kAnd),
          derive_from_core(g, core, not_gadget, GadgetKind::kOr)};
}

const Gadget& BasisKit::get(GadgetKind kind) const {
  switch (kind) {
    case GadgetKind::kNot:
      return not_g;
    case GadgetKind::kAnd:
      return and_g;
    case GadgetKind::kOr:
      return or_g;
    case GadgetKind::kFanout:
      return fanout_g;
  }
  return not_g;
}

BasisKit extract_basis(const GateRef& g, const BasisOptions& options) {
  const GateClass cls = classify(*g);
  if (cls.affine) {
    throw ClassificationError(ClassificationError::Reason::kAffine,
                              "gate '" + g->name() + "' is affine");
  }
  BasisKit kit;
  kit.source = g;
  if (cls.one_to_one) {
    kit.not_g = extract_not(g);
  } else if (options.external_not && cls.injective) {
    kit.not_g = *options.external_not;
  } else if (options.external_not) {
    throw ClassificationError(ClassificationError::Reason::kNotInjective,
                              "gate '" + g->name() + "' is not injective");
  } else {
    throw ClassificationError(ClassificationError::Reason::kNotOneToOne,
                              "gate '" + g->name() + "' is not one-to-one");
  }
  kit.fanout_g = extract_fanout(g, kit.not_g);

  const auto and_core = find_two_input_core(*g, CoreTarget::kAnd);
  const auto or_core = find_two_input_core(*g, CoreTarget::kOr);
  if (!and_core || !or_core) {
    throw Error("non-affine gate '" + g->name() + "' has no two-input core");
  }
  kit.and_g = derive_from_core(g, *and_core, kit.not_g, GadgetKind::kAnd);
  kit.or_g = derive_from_core(g, *or_core, kit.not_g, GadgetKind::kOr);

  for (GadgetKind k : {GadgetKind::kNot, GadgetKind::kAnd, GadgetKind::kOr,
                       GadgetKind::kFanout}) {
    verify_gadget(kit.get(k));
  }
  return kit;
}

std::string binding_summary(const Gadget& g) {
  std::ostringstream out;
  const PinBinding& b = g.binding;
  if (!b.gate) {
    out << "external circuit";
  } else {
    out << "fix";
    if (b.fixed.empty()) out << " -";
    for (const auto& [pin, v] : b.fixed) out << " x" << pin + 1 << "=" << v;
    out << "; in";
    for (std::size_t k = 0; k < b.role_inputs.size(); ++k) {
      out << " " << (b.input_inverted[k] ? "~" : "") << "x"
          << b.role_inputs[k] + 1;
    }
    out << "; out";
    for (std::size_t k = 0; k < b.role_outputs.size(); ++k) {
      out << " " << (b.output_inverted[k] ? "~" : "") << "y"
          << b.role_outputs[k] + 1;
    }
  }
  out << "; copies " << g.gate_copies << "; garbage " << g.garbage_count;
  return out.str();
}

std::string describe_kit(const BasisKit& kit) {
  std::ostringstream out;
  out << "basis kit for gate " << kit.source->name() << " ("
      << kit.source->n_inputs() << " in, " << kit.source->n_outputs()
      << " out)\n";
  for (GadgetKind k : {GadgetKind::kNot, GadgetKind::kAnd, GadgetKind::kOr,
                       GadgetKind::kFanout}) {
    std::string label(to_string(k));
    label.resize(7, ' ');
    out << "  " << label << binding_summary(kit.get(k)) << "\n";
  }
  return out.str();
}

}  // namespace onegate

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

#include "cli.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "onegate/basis.h"
#include "onegate/circuit.h"
#include "onegate/errors.h"
#include "onegate/gadget.h"
#include "onegate/gate.h"
#include "onegate/lower.h"
#include "onegate/netlist.h"
#include "onegate/sweep.h"

namespace onegate::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

// Bad command-line values or unreadable files.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw InputError("cannot write '" + path.string() + "'");
  }
}

Gate load_gate(const std::string& path) {
  return parse_truth_table(read_file(path));
}

Circuit load_circuit(const std::string& path) {
  Circuit c = parse_circuit(read_file(path), fs::path(path).stem().string());
  c.validate();
  return c;
}

std::string affine_text(const AffineForm& form) {
  std::string s;
  if (form.a0) s = "1";
  for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
    if (!form.coeffs[i]) continue;
    if (!s.empty()) s += " + ";
    s += "x" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

struct Context {
  bool json = false;
  std::ostringstream out;
  std::ostringstream err;
  std::ostream* progress = nullptr;

  void emit(const Json& j) { out << j.dump(2) << "\n"; }
};

int do_classify(Context& ctx, const std::string& path) {
  const Gate g = load_gate(path);
  const GateClass cls = classify(g);
  Json columns = Json::array();
  for (unsigned c = 0; c < g.n_outputs(); ++c) {
    const auto form = fit_affine(output_column(g, c));
    columns.push_back({{"output", c + 1},
                       {"affine", form.has_value()},
                       {"form", form ? affine_text(*form) : ""}});
  }
  if (ctx.json) {
    ctx.emit({{"command", "classify"},
              {"gate", g.name()},
              {"inputs", g.n_inputs()},
              {"outputs", g.n_outputs()},
              {"affine", cls.affine},
              {"injective", cls.injective},
              {"one_to_one", cls.one_to_one},
              {"wire_permutation", cls.wire_permutation},
              {"balanced_columns", cls.balanced_columns},
              {"columns", columns}});
    return kOk;
  }
  ctx.out << "gate " << g.name() << ": " << g.n_inputs() << " inputs, "
          << g.n_outputs() << " outputs\n"
          << "affine: " << std::boolalpha << cls.affine << "\n"
          << "injective: " << cls.injective << "\n"
          << "one_to_one: " << cls.one_to_one << "\n"
          << "wire_permutation: " << cls.wire_permutation << "\n"
          << "balanced_columns: " << cls.balanced_columns << "\n";
  for (const auto& col : columns) {
    ctx.out << "  y" << col["output"].get<unsigned>() << ": "
            << (col["affine"].get<bool>()
                    ? "affine, " + col["form"].get<std::string>()
                    : std::string("non-affine"))
            << "\n";
  }
  return kOk;
}

Json gadget_json(const Gadget& g) {
  Json j;
  j["kind"] = std::string(to_string(g.kind));
  const PinBinding& b = g.binding;
  if (b.gate) {
    Json fixed = Json::object();
    for (const auto& [pin, v] : b.fixed) {
      fixed["x" + std::to_string(pin + 1)] = v ? 1 : 0;
    }
    Json ins = Json::array(), outs = Json::array();
    for (std::size_t k = 0; k < b.role_inputs.size(); ++k) {
      ins.push_back({{"pin", "x" + std::to_string(b.role_inputs[k] + 1)},
                     {"inverted", static_cast<bool>(b.input_inverted[k])}});
    }
    for (std::size_t k = 0; k < b.role_outputs.size(); ++k) {
      outs.push_back({{"pin", "y" + std::to_string(b.role_outputs[k] + 1)},
                      {"inverted", static_cast<bool>(b.output_inverted[k])}});
    }
    j["binding"] = {{"fixed", fixed}, {"inputs", ins}, {"outputs", outs}};
  } else {
    j["binding"] = nullptr;
  }
  j["gate_copies"] = g.gate_copies;
  j["garbage"] = g.garbage_count;
  j["verified"] = true;
  return j;
}

constexpr GadgetKind kKinds[] = {GadgetKind::kNot, GadgetKind::kAnd,
                                 GadgetKind::kOr, GadgetKind::kFanout};

BasisKit load_kit(const std::string& gate_path,
                  const std::string& external_not) {
  auto gate = std::make_shared<const Gate>(load_gate(gate_path));
  BasisOptions options;
  if (!external_not.empty()) {
    try {
      options.external_not =
          wrap_gadget(GadgetKind::kNot, load_circuit(external_not));
    } catch (const GadgetVerificationError& e) {
      throw InputError("'" + external_not + "' is not a NOT gadget: " +
                       e.what());
    }
  }
  return extract_basis(gate, options);
}

int do_basis(Context& ctx, const std::string& path, const std::string& out_dir,
             const std::string& external_not) {
  const BasisKit kit = load_kit(path, external_not);
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (GadgetKind k : kKinds) {
      std::string file(to_string(k));
      std::transform(file.begin(), file.end(), file.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      write_file(fs::path(out_dir) / (file + ".netlist"),
                 emit_netlist(kit.get(k).circuit));
    }
    write_file(fs::path(out_dir) / "kit.txt", describe_kit(kit));
  }
  if (ctx.json) {
    Json gadgets = Json::array();
    for (GadgetKind k : kKinds) gadgets.push_back(gadget_json(kit.get(k)));
    ctx.emit({{"command", "basis"},
              {"gate", kit.source->name()},
              {"inputs", kit.source->n_inputs()},
              {"outputs", kit.source->n_outputs()},
              {"external_not", !external_not.empty()},
              {"gadgets", gadgets}});
  } else {
    ctx.out << describe_kit(kit);
  }
  return kOk;
}

int do_compile(Context& ctx, const std::string& src_path,
               const std::string& gate_path, const std::string& out_path) {
  const SourceNetlist src = parse_netlist(read_file(src_path));
  const BasisKit kit = load_kit(gate_path, "");
  const LoweringResult lowered = lower_to_basis(src, kit);
  const std::string text = emit_netlist(lowered.circuit);
  if (!out_path.empty()) write_file(out_path, text);
  const LoweringReport& r = lowered.report;
  if (ctx.json) {
    Json j = {{"command", "compile"},
              {"gate", kit.source->name()},
              {"inputs", src.inputs.size()},
              {"outputs", src.outputs.size()},
              {"statements", src.statements.size()},
              {"gate_copies", r.gate_copies},
              {"fanouts_inserted", r.fanouts_inserted},
              {"constant_sources", r.constant_sources},
              {"garbage_outputs", r.garbage_outputs},
              {"equivalent", true}};
    if (out_path.empty()) j["netlist"] = text;
    ctx.emit(j);
    return kOk;
  }
  std::ostream& report = out_path.empty() ? ctx.err : ctx.out;
  if (out_path.empty()) ctx.out << text;
  report << "compiled " << src.statements.size() << " statements onto gate "
         << kit.source->name() << ": " << r.gate_copies << " copies, "
         << r.fanouts_inserted << " fan-outs, " << r.constant_sources
         << " constants, " << r.garbage_outputs
         << " garbage outputs; equivalence verified\n";
  return kOk;
}

std::uint64_t parse_bits(const std::string& bits, std::size_t width) {
  if (bits.size() != width || bits.find_first_not_of("01") != std::string::npos) {
    throw InputError("--inputs must be " + std::to_string(width) +
                     " binary digits");
  }
  std::uint64_t x = 0;
  for (char c : bits) x = (x << 1) | static_cast<std::uint64_t>(c == '1');
  return x;
}

int do_simulate(Context& ctx, const std::string& path, const std::string& bits,
                bool trace) {
  const Circuit c = load_circuit(path);
  if (c.n_inputs() > 63) throw InputError("too many inputs to simulate");
  const std::uint64_t x = parse_bits(bits, c.n_inputs());
  SimTrace t;
  const std::uint64_t y = simulate(c, x, trace ? &t : nullptr);
  const std::string out_bits = to_bits(y, static_cast<unsigned>(c.n_outputs()));
  if (ctx.json) {
    Json j = {{"command", "simulate"}, {"inputs", bits}, {"outputs", out_bits}};
    if (trace) {
      Json pins = Json::object();
      for (const auto& [name, v] : t.assignment) pins[name] = v ? 1 : 0;
      j["trace"] = pins;
    }
    ctx.emit(j);
    return kOk;
  }
  ctx.out << out_bits << "\n";
  if (trace) ctx.out << t.dump();
  return kOk;
}

int do_table(Context& ctx, const std::string& path) {
  const Gate g = truth_table_of(load_circuit(path));
  if (ctx.json) {
    Json rows = Json::array();
    for (std::uint32_t w : g.table()) rows.push_back(to_bits(w, g.n_outputs()));
    ctx.emit({{"command", "table"},
              {"gate", g.name()},
              {"inputs", g.n_inputs()},
              {"outputs", g.n_outputs()},
              {"rows", rows}});
    return kOk;
  }
  ctx.out << emit_truth_table(g);
  return kOk;
}

int do_verify(Context& ctx, const std::string& a_path,
              const std::string& b_path) {
  const Circuit a = load_circuit(a_path);
  EquivalenceResult result;
  try {
    result = fs::path(b_path).extension() == ".tt"
                 ? check_equivalence(a, load_gate(b_path))
                 : check_equivalence(a, load_circuit(b_path));
  } catch (const ArityMismatchError& e) {
    throw InputError(e.what());
  }
  const auto n = static_cast<unsigned>(a.n_inputs());
  if (ctx.json) {
    Json j = {{"command", "verify"},
              {"equivalent", result.equivalent},
              {"words_checked", std::uint64_t{1} << n}};
    j["counterexample"] = result.counterexample
                              ? Json(to_bits(*result.counterexample, n))
                              : Json(nullptr);
    ctx.emit(j);
  } else if (result.equivalent) {
    ctx.out << "equivalent (" << (std::uint64_t{1} << n)
            << " input words checked)\n";
  } else {
    ctx.out << "not equivalent; counterexample "
            << to_bits(*result.counterexample, n) << "\n";
  }
  return result.equivalent ? kOk : kNegative;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  auto number = [&](const std::string& part) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || p != part.data() + part.size()) {
      throw InputError("--range must look like a..b");
    }
    return v;
  };
  if (dots == std::string::npos) throw InputError("--range must look like a..b");
  return {number(s.substr(0, dots)), number(s.substr(dots + 2))};
}

int do_sweep(Context& ctx, unsigned bits, const std::string& range,
             unsigned jobs) {
  SweepOptions options;
  options.bits = bits;
  options.jobs = jobs;
  if (!range.empty()) {
    const auto [lo, hi] = parse_range(range);
    options.begin = lo;
    options.end = hi;
  } else if (bits > 3) {
    throw InputError("sweeps above 3 bits need --range");
  }
  if (ctx.progress) {
    std::ostream* stream = ctx.progress;
    options.progress = [stream](std::uint64_t done, std::uint64_t total) {
      *stream << "sweep: " << done << "/" << total << "\n";
    };
  }
  SweepReport r;
  try {
    r = sweep_permutations(options);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
  if (ctx.json) {
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx",
                  static_cast<unsigned long long>(r.kit_digest));
    Json j = {{"command", "sweep"},
              {"bits", r.bits},
              {"range", std::to_string(r.begin) + ".." + std::to_string(r.end)},
              {"gates", r.gates},
              {"affine", r.affine},
              {"non_affine", r.non_affine},
              {"wire_permutations", r.wire_permutations},
              {"not_failures", r.not_failures},
              {"not_failures_off_boundary", r.not_failures_off_boundary},
              {"not_found_on_wire_permutation", r.not_found_on_wire_permutation},
              {"unbalanced", r.unbalanced},
              {"basis_kits_verified", r.basis_kits_verified},
              {"basis_failures", r.basis_failures},
              {"fanout_audit_failures", r.fanout_audit_failures},
              {"three_output_audit_failures", r.three_output_audit_failures},
              {"kit_digest", digest}};
    j["expected_affine"] =
        r.expected_affine ? Json(*r.expected_affine) : Json(nullptr);
    j["consistent"] = r.consistent();
    ctx.emit(j);
  } else {
    ctx.out << r.gates << " gates, " << r.not_failures
            << " NOT-failures (wire permutations), " << r.non_affine
            << " non-affine one-to-one, " << r.basis_kits_verified
            << " basis kits verified\n";
    ctx.out << "affine " << r.affine;
    if (r.expected_affine) ctx.out << " (expected " << *r.expected_affine << ")";
    ctx.out << "; wire permutations " << r.wire_permutations
            << "; audit failures " << r.fanout_audit_failures << " fan-out, "
            << r.three_output_audit_failures << " three-output\n";
    ctx.out << (r.consistent() ? "all checks passed\n" : "CHECKS FAILED\n");
  }
  return r.consistent() ? kOk : kNegative;
}

}  // namespace

CommandOutcome run(const std::vector<std::string>& args,
                   std::ostream* progress) {
  CLI::App app{"Classify binary gates and build circuits from one gate.",
               "onegate"};
  app.require_subcommand(1);
  std::string report = "text";
  app.add_option("--report", report, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string gate_path, out_path, netlist_path, other_path, bits_arg,
      injective_not, range;
  unsigned bits = 3, jobs = 1;
  bool trace = false;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a gate");
  classify_cmd->add_option("gate", gate_path, ".tt file")->required();

  auto* basis_cmd = app.add_subcommand("basis", "Extract NOT/AND/OR/FANOUT");
  basis_cmd->add_option("gate", gate_path, ".tt file")->required();
  basis_cmd->add_option("--out", out_path, "Directory for gadget netlists");
  basis_cmd->add_option("--allow-injective", injective_not,
                        "NOT gadget netlist for injective gates");

  auto* compile_cmd = app.add_subcommand("compile", "Lower a netlist");
  compile_cmd->add_option("netlist", netlist_path, "Source netlist")
      ->required();
  compile_cmd->add_option("--gate", gate_path, ".tt file")->required();
  compile_cmd->add_option("--out", out_path, "Output netlist");

  auto* simulate_cmd = app.add_subcommand("simulate", "Simulate one word");
  simulate_cmd->add_option("netlist", netlist_path)->required();
  simulate_cmd->add_option("--inputs", bits_arg, "Input bits")->required();
  simulate_cmd->add_flag("--trace", trace, "Dump every signal");

  auto* table_cmd = app.add_subcommand("table", "Tabulate a netlist");
  table_cmd->add_option("netlist", netlist_path)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive equivalence");
  verify_cmd->add_option("a", netlist_path)->required();
  verify_cmd->add_option("b", other_path, "Netlist or .tt file")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep all one-to-one gates");
  sweep_cmd->add_option("--bits", bits, "Gate width")->check(CLI::Range(1, 4));
  sweep_cmd->add_option("--range", range, "Permutation index range a..b");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::Range(1, 256));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CommandOutcome outcome;
  Context ctx;
  ctx.progress = progress;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    outcome.out = out.str();
    outcome.err = err.str();
    outcome.exit_code = code == 0 ? kOk : kInputError;
    return outcome;
  }
  ctx.json = report == "json";

  try {
    if (*classify_cmd) {
      outcome.exit_code = do_classify(ctx, gate_path);
    } else if (*basis_cmd) {
      outcome.exit_code = do_basis(ctx, gate_path, out_path, injective_not);
    } else if (*compile_cmd) {
      outcome.exit_code = do_compile(ctx, netlist_path, gate_path, out_path);
    } else if (*simulate_cmd) {
      outcome.exit_code = do_simulate(ctx, netlist_path, bits_arg, trace);
    } else if (*table_cmd) {
      outcome.exit_code = do_table(ctx, netlist_path);
    } else if (*verify_cmd) {
      outcome.exit_code = do_verify(ctx, netlist_path, other_path);
    } else if (*sweep_cmd) {
      outcome.exit_code = do_sweep(ctx, bits, range, jobs);
    }
  } catch (const ClassificationError& e) {
    outcome.exit_code = kNegative;
    if (e.reason() == ClassificationError::Reason::kAffine) {
      ctx.out << "gate is affine\n";
    } else if (e.reason() == ClassificationError::Reason::kNotOneToOne) {
      ctx.out << "gate is not one-to-one\n";
    } else {
      ctx.out << "gate is not injective\n";
    }
    ctx.err << e.what() << "\n";
  } catch (const TrivialGateError& e) {
    outcome.exit_code = kNegative;
    ctx.out << "gate is trivial: no restriction yields NOT\n";
    ctx.err << e.what() << "\n";
  } catch (const NoFanoutError& e) {
    outcome.exit_code = kNegative;
    ctx.out << "gate yields no fan-out\n";
    ctx.err << e.what() << "\n";
  } catch (const ParseError& e) {
    outcome.exit_code = kInputError;
    ctx.err << "parse error: " << e.what() << "\n";
  } catch (const SemanticError& e) {
    outcome.exit_code = kInputError;
    ctx.err << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    outcome.exit_code = kInputError;
    ctx.err << "error: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    outcome.exit_code = kInputError;
    ctx.err << "invalid circuit: " << e.what() << "\n";
  } catch (const DomainError& e) {
    outcome.exit_code = kInputError;
    ctx.err << "error: " << e.what() << "\n";
  } catch (const TooWideError& e) {
    outcome.exit_code = kInputError;
    ctx.err << "error: " << e.what() << "\n";
  } catch (const fs::filesystem_error& e) {
    outcome.exit_code = kInputError;
    ctx.err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    outcome.exit_code = kNegative;
    ctx.err << "error: " << e.what() << "\n";
  }
  outcome.out = ctx.out.str();
  outcome.err = ctx.err.str();
  return outcome;
}

}  // namespace onegate::cli

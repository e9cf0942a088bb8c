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

#include "onegate/gate.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "onegate/errors.h"

namespace onegate {

Gate::Gate(std::string name, unsigned n_inputs, unsigned n_outputs,
           std::vector<std::uint32_t> table)
    : name_(std::move(name)),
      n_inputs_(n_inputs),
      n_outputs_(n_outputs),
      table_(std::move(table)) {
  if (n_inputs_ > kMaxGateWidth) {
    throw DomainError("gate '" + name_ + "': too many inputs (" +
                      std::to_string(n_inputs_) + ")");
  }
  if (n_outputs_ < 1 || n_outputs_ > kMaxGateWidth) {
    throw DomainError("gate '" + name_ + "': output count must be in 1..16");
  }
  if (table_.size() != (std::size_t{1} << n_inputs_)) {
    throw DomainError("gate '" + name_ + "': table has " +
                      std::to_string(table_.size()) + " rows, expected " +
                      std::to_string(std::size_t{1} << n_inputs_));
  }
  const std::uint32_t limit = std::uint32_t{1} << n_outputs_;
  for (std::size_t r = 0; r < table_.size(); ++r) {
    if (table_[r] >= limit) {
      throw DomainError("gate '" + name_ + "': row " + std::to_string(r) +
                        " exceeds output width");
    }
  }
}

unsigned column_vars(const Column& col) {
  if (col.empty() || !std::has_single_bit(col.size())) {
    throw DomainError("column length is not a power of two");
  }
  return static_cast<unsigned>(std::countr_zero(col.size()));
}

Column output_column(const Gate& g, unsigned out) {
  if (out >= g.n_outputs()) throw DomainError("output index out of range");
  Column col(g.rows());
  for (std::uint32_t r = 0; r < g.rows(); ++r) col[r] = g.output_bit(r, out);
  return col;
}

Column input_column(unsigned n_inputs, unsigned in) {
  if (in >= n_inputs) throw DomainError("input index out of range");
  Column col(std::size_t{1} << n_inputs);
  const unsigned shift = n_inputs - 1 - in;
  for (std::uint32_t r = 0; r < col.size(); ++r) col[r] = (r >> shift) & 1u;
  return col;
}

bool AffineForm::evaluate(std::uint32_t word) const {
  const auto n = static_cast<unsigned>(coeffs.size());
  bool v = a0;
  for (unsigned i = 0; i < n; ++i) {
    if (coeffs[i] && ((word >> (n - 1 - i)) & 1u)) v = !v;
  }
  return v;
}

std::optional<AffineForm> fit_affine(const Column& col) {
  const unsigned n = column_vars(col);
  AffineForm form;
  form.a0 = col[0] != 0;
  form.coeffs.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    form.coeffs[i] = (col[0] ^ col[std::size_t{1} << (n - 1 - i)]) != 0;
  }
  for (std::uint32_t r = 0; r < col.size(); ++r) {
    if (form.evaluate(r) != (col[r] != 0)) return std::nullopt;
  }
  return form;
}

GateClass classify(const Gate& g) {
  const unsigned n = g.n_inputs();
  const unsigned m = g.n_outputs();
  GateClass cls;

  cls.affine = true;
  cls.balanced_columns = n > 0;
  cls.wire_permutation = true;
  std::vector<Column> inputs;
  for (unsigned i = 0; i < n; ++i) inputs.push_back(input_column(n, i));
  for (unsigned c = 0; c < m; ++c) {
    const Column col = output_column(g, c);
    if (cls.affine && !fit_affine(col)) cls.affine = false;
    const auto ones = static_cast<std::size_t>(
        std::count(col.begin(), col.end(), std::uint8_t{1}));
    if (n == 0 || ones != (std::size_t{1} << (n - 1))) {
      cls.balanced_columns = false;
    }
    if (std::find(inputs.begin(), inputs.end(), col) == inputs.end()) {
      cls.wire_permutation = false;
    }
  }

  std::vector<std::uint32_t> sorted = g.table();
  std::sort(sorted.begin(), sorted.end());
  cls.injective =
      std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  cls.one_to_one = cls.injective && n == m;
  return cls;
}

Restriction Restriction::from_fixing(unsigned n_inputs,
                                     std::vector<unsigned> free_inputs,
                                     std::uint32_t fixing) {
  Restriction r;
  r.free = std::move(free_inputs);
  std::vector<unsigned> fixed_idx;
  for (unsigned i = 0; i < n_inputs; ++i) {
    if (std::find(r.free.begin(), r.free.end(), i) == r.free.end()) {
      fixed_idx.push_back(i);
    }
  }
  const auto k = static_cast<unsigned>(fixed_idx.size());
  for (unsigned j = 0; j < k; ++j) {
    r.fixed[fixed_idx[j]] = (fixing >> (k - 1 - j)) & 1u;
  }
  return r;
}

void Restriction::validate(unsigned n_inputs) const {
  if (free.empty()) throw DomainError("restriction leaves no free input");
  std::vector<bool> seen(n_inputs, false);
  auto mark = [&](unsigned i) {
    if (i >= n_inputs) throw DomainError("restriction input out of range");
    if (seen[i]) throw DomainError("restriction mentions an input twice");
    seen[i] = true;
  };
  for (const auto& [i, v] : fixed) mark(i);
  for (unsigned i : free) mark(i);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw DomainError("restriction does not cover every input");
  }
}

std::uint32_t Restriction::merge(unsigned n_inputs, std::uint32_t w) const {
  std::uint32_t word = 0;
  for (const auto& [i, v] : fixed) {
    if (v) word |= std::uint32_t{1} << (n_inputs - 1 - i);
  }
  const auto k = static_cast<unsigned>(free.size());
  for (unsigned j = 0; j < k; ++j) {
    if ((w >> (k - 1 - j)) & 1u) {
      word |= std::uint32_t{1} << (n_inputs - 1 - free[j]);
    }
  }
  return word;
}

Column restrict(const Gate& g, const Restriction& r, unsigned out) {
  if (out >= g.n_outputs()) throw DomainError("output index out of range");
  r.validate(g.n_inputs());
  Column col(std::size_t{1} << r.free.size());
  for (std::uint32_t w = 0; w < col.size(); ++w) {
    col[w] = g.output_bit(r.merge(g.n_inputs(), w), out);
  }
  return col;
}

std::uint32_t evaluate(const Gate& g, std::uint32_t x) {
  if (x >= g.rows()) {
    throw DomainError("input word " + std::to_string(x) + " out of range for " +
                      std::to_string(g.n_inputs()) + "-input gate");
  }
  return g.table()[x];
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
  };
  auto tail = [&](char c) {
    return head(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '.';
  };
  if (!head(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), tail);
}

std::string to_bits(std::uint64_t word, unsigned width) {
  std::string s(width, '0');
  for (unsigned i = 0; i < width; ++i) {
    if ((word >> (width - 1 - i)) & 1u) s[i] = '1';
  }
  return s;
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

unsigned parse_count(const std::string& tok, std::size_t line) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) {
    throw ParseError(line, "expected a count, got '" + tok + "'");
  }
  return v;
}

}  // namespace

Gate parse_truth_table(std::istream& in) {
  std::string name;
  unsigned n = 0, m = 0;
  int header = 0;
  std::vector<std::uint32_t> table;
  std::size_t lineno = 0;
  std::size_t last_line = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    last_line = lineno;
    switch (header) {
      case 0:
        if (toks.size() != 2 || toks[0] != "gate" || !is_identifier(toks[1])) {
          throw ParseError(lineno, "expected 'gate <identifier>'");
        }
        name = toks[1];
        ++header;
        continue;
      case 1:
        if (toks.size() != 2 || toks[0] != "inputs") {
          throw ParseError(lineno, "expected 'inputs <n>'");
        }
        n = parse_count(toks[1], lineno);
        if (n > kMaxGateWidth) throw ParseError(lineno, "at most 16 inputs");
        ++header;
        continue;
      case 2:
        if (toks.size() != 2 || toks[0] != "outputs") {
          throw ParseError(lineno, "expected 'outputs <m>'");
        }
        m = parse_count(toks[1], lineno);
        if (m < 1 || m > kMaxGateWidth) {
          throw ParseError(lineno, "output count must be in 1..16");
        }
        ++header;
        continue;
      default:
        break;
    }
    if (toks.size() != 1) throw ParseError(lineno, "row must be one bit string");
    const std::string& row = toks[0];
    if (table.size() == (std::size_t{1} << n)) {
      throw ParseError(lineno, "too many rows, expected " +
                                   std::to_string(std::size_t{1} << n));
    }
    if (row.size() != m) {
      throw ParseError(lineno, "row has width " + std::to_string(row.size()) +
                                   ", expected " + std::to_string(m));
    }
    std::uint32_t word = 0;
    for (char c : row) {
      if (c != '0' && c != '1') {
        throw ParseError(lineno, std::string("non-binary character '") + c +
                                     "'");
      }
      word = (word << 1) | static_cast<std::uint32_t>(c == '1');
    }
    table.push_back(word);
  }
  if (header < 3) throw ParseError(lineno, "truncated header");
  if (table.size() != (std::size_t{1} << n)) {
    throw ParseError(last_line, "expected " +
                                    std::to_string(std::size_t{1} << n) +
                                    " rows, got " +
                                    std::to_string(table.size()));
  }
  return Gate(std::move(name), n, m, std::move(table));
}

Gate parse_truth_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_truth_table(in);
}

std::string emit_truth_table(const Gate& g) {
  std::ostringstream out;
  out << "gate " << g.name() << "\n"
      << "inputs " << g.n_inputs() << "\n"
      << "outputs " << g.n_outputs() << "\n";
  for (std::uint32_t word : g.table()) {
    out << to_bits(word, g.n_outputs()) << "\n";
  }
  return out.str();
}

}  // namespace onegate

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

#include "onegate/sweep.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "onegate/basis.h"
#include "onegate/errors.h"
#include "onegate/gate.h"

namespace onegate {

std::uint64_t factorial(unsigned k) {
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

std::uint64_t affine_bijection_count(unsigned bits) {
  const std::uint64_t q = std::uint64_t{1} << bits;
  std::uint64_t order = 1;
  for (unsigned k = 0; k < bits; ++k) order *= q - (std::uint64_t{1} << k);
  return order * q;
}

std::vector<std::uint32_t> nth_permutation(unsigned bits,
                                           std::uint64_t index) {
  const unsigned size = 1u << bits;
  if (index >= factorial(size)) throw DomainError("permutation index too large");
  std::vector<std::uint32_t> pool(size);
  for (unsigned i = 0; i < size; ++i) pool[i] = i;
  std::vector<std::uint32_t> perm;
  for (unsigned k = size; k > 0; --k) {
    const std::uint64_t f = factorial(k - 1);
    const auto pick = static_cast<std::size_t>(index / f);
    index %= f;
    perm.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return perm;
}

bool SweepReport::consistent() const {
  return not_failures == wire_permutations && not_failures_off_boundary == 0 &&
         not_found_on_wire_permutation == 0 && unbalanced == 0 &&
         basis_failures == 0 && basis_kits_verified == non_affine &&
         fanout_audit_failures == 0 && three_output_audit_failures == 0 &&
         (!expected_affine || *expected_affine == affine);
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

unsigned varying_outputs(const Gate& g, const Restriction& r) {
  unsigned count = 0;
  for (unsigned c = 0; c < g.n_outputs(); ++c) {
    const Column col = restrict(g, r, c);
    if (std::adjacent_find(col.begin(), col.end(),
                           std::not_equal_to<>()) != col.end()) {
      ++count;
    }
  }
  return count;
}

void visit_gate(unsigned bits, std::uint64_t index,
                const std::vector<std::uint32_t>& perm, SweepReport& out) {
  auto g = std::make_shared<const Gate>("perm" + std::to_string(index), bits,
                                        bits, perm);
  ++out.gates;
  const GateClass cls = classify(*g);
  if (cls.affine) {
    ++out.affine;
  } else {
    ++out.non_affine;
  }
  if (cls.wire_permutation) ++out.wire_permutations;
  if (!cls.balanced_columns) ++out.unbalanced;

  bool has_not = true;
  try {
    extract_not(g);
  } catch (const TrivialGateError&) {
    has_not = false;
  }
  if (!has_not) {
    ++out.not_failures;
    if (!cls.wire_permutation) ++out.not_failures_off_boundary;
  } else if (cls.wire_permutation) {
    ++out.not_found_on_wire_permutation;
  }

  if (cls.affine) return;
  try {
    const BasisKit kit = extract_basis(g);
    ++out.basis_kits_verified;
    out.kit_digest += fnv1a(describe_kit(kit));
  } catch (const NoFanoutError&) {
    ++out.fanout_audit_failures;
    ++out.basis_failures;
  } catch (const Error&) {
    ++out.basis_failures;
  }
  if (const auto core = find_two_input_core(*g, CoreTarget::kAnd)) {
    if (varying_outputs(*g, core->restriction) < 3) {
      ++out.three_output_audit_failures;
    }
  }
}

void merge_into(SweepReport& total, const SweepReport& part) {
  total.gates += part.gates;
  total.affine += part.affine;
  total.non_affine += part.non_affine;
  total.wire_permutations += part.wire_permutations;
  total.not_failures += part.not_failures;
  total.not_failures_off_boundary += part.not_failures_off_boundary;
  total.not_found_on_wire_permutation += part.not_found_on_wire_permutation;
  total.unbalanced += part.unbalanced;
  total.basis_kits_verified += part.basis_kits_verified;
  total.basis_failures += part.basis_failures;
  total.fanout_audit_failures += part.fanout_audit_failures;
  total.three_output_audit_failures += part.three_output_audit_failures;
  total.kit_digest += part.kit_digest;
}

}  // namespace

SweepReport sweep_permutations(const SweepOptions& options) {
  if (options.bits < 1 || options.bits > 4) {
    throw DomainError("sweep supports 1 to 4 bits");
  }
  const std::uint64_t total = factorial(1u << options.bits);
  const std::uint64_t end = options.end.value_or(total);
  if (options.begin > end || end > total) {
    throw DomainError("sweep range outside 0.." + std::to_string(total));
  }
  SweepReport report;
  report.bits = options.bits;
  report.begin = options.begin;
  report.end = end;
  if (options.begin == 0 && end == total) {
    report.expected_affine = affine_bijection_count(options.bits);
  }

  const std::uint64_t count = end - options.begin;
  const unsigned jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.jobs, 1, std::max<std::uint64_t>(count, 1)));
  std::vector<SweepReport> parts(jobs);
  std::atomic<std::uint64_t> done{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<bool> failed{false};
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t lo = options.begin + count * w / jobs;
    const std::uint64_t hi = options.begin + count * (w + 1) / jobs;
    workers.emplace_back([&, w, lo, hi] {
      try {
        if (lo == hi) return;
        std::vector<std::uint32_t> perm = nth_permutation(options.bits, lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
          visit_gate(options.bits, i, perm, parts[w]);
          done.fetch_add(1, std::memory_order_relaxed);
          std::next_permutation(perm.begin(), perm.end());
        }
      } catch (...) {
        errors[w] = std::current_exception();
        failed.store(true);
      }
    });
  }
  if (options.progress) {
    while (done.load() < count && !failed.load()) {
      std::this_thread::sleep_for(std::chrono::milliseconds(200));
      options.progress(done.load(), count);
    }
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& part : parts) merge_into(report, part);
  return report;
}

}  // namespace onegate

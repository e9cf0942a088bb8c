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

#ifndef ONEGATE_SWEEP_H_
#define ONEGATE_SWEEP_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace onegate {

std::uint64_t factorial(unsigned k);

// |GL(bits, 2)| * 2^bits: the number of affine bijections on bits-bit words.
std::uint64_t affine_bijection_count(unsigned bits);

// The index-th permutation of 0..2^bits-1 in lexicographic order.
std::vector<std::uint32_t> nth_permutation(unsigned bits, std::uint64_t index);

struct SweepOptions {
  unsigned bits = 3;
  std::uint64_t begin = 0;
  // Defaults to (2^bits)!.
  std::optional<std::uint64_t> end;
  unsigned jobs = 1;
  // Called from the calling thread with (done, total).
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

// Counts over every one-to-one gate in the range. All fields are sums over
// gates, so they do not depend on the number of workers.
struct SweepReport {
  unsigned bits = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  std::uint64_t gates = 0;
  std::uint64_t affine = 0;
  std::uint64_t non_affine = 0;
  std::uint64_t wire_permutations = 0;
  std::uint64_t not_failures = 0;
  // NOT missing on a gate that is not a wire permutation.
  std::uint64_t not_failures_off_boundary = 0;
  // NOT found on a wire permutation.
  std::uint64_t not_found_on_wire_permutation = 0;
  std::uint64_t unbalanced = 0;
  std::uint64_t basis_kits_verified = 0;
  std::uint64_t basis_failures = 0;
  // Non-affine gates without a fan-out restriction.
  std::uint64_t fanout_audit_failures = 0;
  // AND cores whose restriction has fewer than three varying outputs.
  std::uint64_t three_output_audit_failures = 0;
  // Sum of per-gate kit hashes.
  std::uint64_t kit_digest = 0;
  // Set only when the range covers every permutation.
  std::optional<std::uint64_t> expected_affine;

  bool consistent() const;
};

SweepReport sweep_permutations(const SweepOptions& options);

}  // namespace onegate

#endif  // ONEGATE_SWEEP_H_

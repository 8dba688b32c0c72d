// Copyright 2026 The fairdec Authors
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

#ifndef FAIRDEC_ENUMERATION_HPP_
#define FAIRDEC_ENUMERATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fairdec/model.hpp"

namespace fairdec {

/// Default cap on enumerated outcomes for exact searches.
inline constexpr std::uint64_t kDefaultOutcomeCap = 10'000'000;

/// Exact product of alternative counts, as a decimal string.
std::string outcome_space_size(const DecisionInstance& instance);

/// Throws CapExceeded (carrying the exact product) when the outcome space
/// of `instance` is larger than `cap`. `what` names the caller in the message.
void require_outcome_space_within(const DecisionInstance& instance, std::uint64_t cap,
                                  const char* what);

/// Streams every outcome in lexicographic order of the choice vector.
///
///   OutcomeEnumerator it(instance, cap);
///   for (Outcome c; it.next(c);) { ... }
class OutcomeEnumerator {
 public:
  OutcomeEnumerator(const DecisionInstance& instance, std::uint64_t cap);

  /// Writes the next outcome to `out`; returns false once exhausted.
  bool next(Outcome& out);

 private:
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Outcome> enumerate_outcomes(const DecisionInstance& instance, std::uint64_t cap);

/// Streams all n^m allocations of a goods instance, ordered lexicographically
/// by the owner vector (owner of g1, owner of g2, ...).
class AllocationEnumerator {
 public:
  AllocationEnumerator(const GoodsInstance& goods, std::uint64_t cap);

  bool next(Allocation& out);

  /// Owner vector of the allocation last produced by next().
  const std::vector<std::size_t>& owners() const { return owners_; }

 private:
  std::size_t players_;
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> owners_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace fairdec

#endif  // FAIRDEC_ENUMERATION_HPP_

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

#include "fairdec/enumeration.hpp"

#include <gmpxx.h>

#include "fairdec/errors.hpp"

namespace fairdec {
namespace {

// Advances an odometer whose last digit moves fastest. Returns false on wrap.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < radix[k]) return true;
    digits[k] = 0;
  }
  return false;
}

void require_within(const mpz_class& size, std::uint64_t cap, const std::string& what) {
  if (size > mpz_class(std::to_string(cap))) {
    throw CapExceeded(what + ": search space has " + size.get_str() + " elements, cap is " +
                          std::to_string(cap),
                      size.get_str());
  }
}

}  // namespace

std::string outcome_space_size(const DecisionInstance& instance) {
  mpz_class size = 1;
  for (const Issue& issue : instance.issues) size *= static_cast<unsigned long>(issue.alternative_count);
  return size.get_str();
}

void require_outcome_space_within(const DecisionInstance& instance, std::uint64_t cap,
                                  const char* what) {
  require_within(mpz_class(outcome_space_size(instance)), cap, what);
}

OutcomeEnumerator::OutcomeEnumerator(const DecisionInstance& instance, std::uint64_t cap) {
  require_valid(instance);
  require_outcome_space_within(instance, cap, "outcome enumeration");
  radix_.reserve(instance.issue_count());
  for (const Issue& issue : instance.issues) radix_.push_back(issue.alternative_count);
  current_.assign(radix_.size(), 0);
}

bool OutcomeEnumerator::next(Outcome& out) {
  if (done_) return false;
  if (started_ && !advance(current_, radix_)) {
    done_ = true;
    return false;
  }
  started_ = true;
  out.choices = current_;
  return true;
}

std::vector<Outcome> enumerate_outcomes(const DecisionInstance& instance, std::uint64_t cap) {
  OutcomeEnumerator it(instance, cap);
  std::vector<Outcome> out;
  for (Outcome c; it.next(c);) out.push_back(c);
  return out;
}

AllocationEnumerator::AllocationEnumerator(const GoodsInstance& goods, std::uint64_t cap)
    : players_(goods.players) {
  require_valid(goods);
  mpz_class size;
  mpz_ui_pow_ui(size.get_mpz_t(), goods.players, goods.goods);
  require_within(size, cap, "allocation enumeration");
  owners_.assign(goods.goods, 0);
  radix_.assign(goods.goods, goods.players);
}

bool AllocationEnumerator::next(Allocation& out) {
  if (done_) return false;
  if (started_ && !advance(owners_, radix_)) {
    done_ = true;
    return false;
  }
  started_ = true;
  out.bundles.assign(players_, {});
  for (std::size_t g = 0; g < owners_.size(); ++g) out.bundles[owners_[g]].push_back(g);
  return true;
}

}  // namespace fairdec

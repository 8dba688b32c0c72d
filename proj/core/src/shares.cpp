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

#include "fairdec/shares.hpp"

#include <algorithm>
#include <functional>

#include "fairdec/errors.hpp"

namespace fairdec {
namespace {

std::size_t picks_per_player(const DecisionInstance& instance) {
  return instance.issue_count() / instance.players;
}

// Restricted-growth enumeration of set partitions: item k joins one of the
// blocks opened so far or opens a new one (while fewer than `max_blocks`).
class PartitionSearch {
 public:
  PartitionSearch(std::vector<Rational> values, std::size_t max_blocks)
      : values_(std::move(values)), max_blocks_(max_blocks) {}

  Rational run() {
    sums_.clear();
    best_ = Rational(0);
    descend(0);
    return best_;
  }

 private:
  void descend(std::size_t item) {
    if (item == values_.size()) {
      if (sums_.size() < max_blocks_) return;  // an empty bundle forces a minimum of 0
      const Rational worst = *std::min_element(sums_.begin(), sums_.end());
      if (worst > best_) best_ = worst;
      return;
    }
    for (std::size_t b = 0; b < sums_.size(); ++b) {
      sums_[b] += values_[item];
      descend(item + 1);
      sums_[b] -= values_[item];
    }
    if (sums_.size() < max_blocks_) {
      sums_.push_back(values_[item]);
      descend(item + 1);
      sums_.pop_back();
    }
  }

  std::vector<Rational> values_;
  std::size_t max_blocks_;
  std::vector<Rational> sums_;
  Rational best_;
};

}  // namespace

Rational prop_share(const DecisionInstance& instance, std::size_t player) {
  const MaxUtilityProfile profile = sorted_max_utilities(instance, player);
  Rational total;
  for (const auto& v : profile.per_issue) total += v;
  return total / Rational(static_cast<std::int64_t>(instance.players));
}

Rational rrs_share(const DecisionInstance& instance, std::size_t player) {
  const MaxUtilityProfile profile = sorted_max_utilities(instance, player);
  const std::size_t n = instance.players;
  Rational total;
  for (std::size_t k = 1; k <= picks_per_player(instance); ++k) total += profile.sorted[k * n - 1];
  return total;
}

Rational pps_share(const DecisionInstance& instance, std::size_t player) {
  const MaxUtilityProfile profile = sorted_max_utilities(instance, player);
  const std::size_t m = instance.issue_count();
  Rational total;
  for (std::size_t k = m - picks_per_player(instance); k < m; ++k) total += profile.sorted[k];
  return total;
}

std::string bounded_partition_count(std::size_t items, std::size_t blocks) {
  // Stirling numbers of the second kind, row by row: S(k, j) = j S(k-1, j) + S(k-1, j-1).
  std::vector<mpz_class> row(blocks + 1, 0);
  row[0] = 1;
  for (std::size_t k = 1; k <= items; ++k) {
    for (std::size_t j = std::min(k, blocks); j >= 1; --j) {
      row[j] = row[j] * static_cast<unsigned long>(j) + row[j - 1];
    }
    row[0] = 0;
  }
  mpz_class total = 0;
  for (const auto& v : row) total += v;
  return total.get_str();
}

Rational mms_share(const DecisionInstance& instance, std::size_t player, std::uint64_t cap) {
  const MaxUtilityProfile profile = sorted_max_utilities(instance, player);
  if (instance.issue_count() < instance.players) return Rational(0);
  const std::string count = bounded_partition_count(instance.issue_count(), instance.players);
  if (mpz_class(count) > mpz_class(std::to_string(cap))) {
    throw CapExceeded("maximin share search needs " + count + " partitions, cap is " +
                          std::to_string(cap),
                      count);
  }
  return PartitionSearch(profile.sorted, instance.players).run();
}

ShareProfile share_profile(const DecisionInstance& instance, bool with_mms, std::uint64_t mms_cap) {
  require_valid(instance);
  ShareProfile out;
  out.p = picks_per_player(instance);
  out.players.reserve(instance.players);
  for (std::size_t i = 0; i < instance.players; ++i) {
    PlayerShares s{prop_share(instance, i), rrs_share(instance, i), pps_share(instance, i),
                   std::nullopt};
    if (with_mms) s.mms = mms_share(instance, i, mms_cap);
    out.players.push_back(std::move(s));
  }
  return out;
}

}  // namespace fairdec

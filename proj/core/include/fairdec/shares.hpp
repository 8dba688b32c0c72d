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

#ifndef FAIRDEC_SHARES_HPP_
#define FAIRDEC_SHARES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairdec/model.hpp"
#include "fairdec/rational.hpp"

namespace fairdec {

/// Default cap on the number of issue partitions the maximin share search visits.
inline constexpr std::uint64_t kDefaultMmsCap = 1'000'000;

/// (1/n) * sum over issues of the player's best utility.
Rational prop_share(const DecisionInstance& instance, std::size_t player);

/// Round robin share: sum of the player's (n)th, (2n)th, ..., (pn)th largest
/// per-issue maxima with p = floor(m/n). Zero when m < n.
Rational rrs_share(const DecisionInstance& instance, std::size_t player);

/// Pessimistic proportional share: sum of the p smallest per-issue maxima.
Rational pps_share(const DecisionInstance& instance, std::size_t player);

/// Maximin share by brute force over set partitions of the issues into at
/// most n bundles (empty bundles allowed). Throws CapExceeded when the number
/// of such partitions exceeds `cap`.
Rational mms_share(const DecisionInstance& instance, std::size_t player,
                   std::uint64_t cap = kDefaultMmsCap);

/// Number of set partitions of `items` elements into at most `blocks` blocks,
/// as a decimal string (it overflows 64 bits quickly).
std::string bounded_partition_count(std::size_t items, std::size_t blocks);

struct PlayerShares {
  Rational prop;
  Rational rrs;
  Rational pps;
  std::optional<Rational> mms;
};

struct ShareProfile {
  /// floor(m / n).
  std::size_t p = 0;
  std::vector<PlayerShares> players;
};

ShareProfile share_profile(const DecisionInstance& instance, bool with_mms = false,
                           std::uint64_t mms_cap = kDefaultMmsCap);

}  // namespace fairdec

#endif  // FAIRDEC_SHARES_HPP_

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

#ifndef FAIRDEC_MODEL_HPP_
#define FAIRDEC_MODEL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "fairdec/rational.hpp"

namespace fairdec {

/// One public issue: exactly one of `alternative_count` alternatives is chosen.
struct Issue {
  std::size_t alternative_count = 0;
  /// utilities[player][alternative]; every row has alternative_count entries.
  std::vector<std::vector<Rational>> utilities;
  std::string name;
  /// Empty, or one label per alternative.
  std::vector<std::string> alternative_names;

  const Rational& utility(std::size_t player, std::size_t alternative) const {
    return utilities[player][alternative];
  }
};

/// A public decision making problem: n players, m issues, additive utilities.
struct DecisionInstance {
  std::size_t players = 0;
  std::vector<Issue> issues;
  /// Empty, or one label per player.
  std::vector<std::string> player_names;

  std::size_t issue_count() const { return issues.size(); }
  const Rational& utility(std::size_t player, std::size_t issue, std::size_t alternative) const {
    return issues[issue].utilities[player][alternative];
  }
};

/// A private goods division problem: n players, m goods, additive utilities.
struct GoodsInstance {
  std::size_t players = 0;
  std::size_t goods = 0;
  /// utilities[player][good].
  std::vector<std::vector<Rational>> utilities;
  std::vector<std::string> player_names;
  std::vector<std::string> good_names;

  const Rational& utility(std::size_t player, std::size_t good) const {
    return utilities[player][good];
  }
};

/// One chosen alternative per issue.
struct Outcome {
  std::vector<std::size_t> choices;

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend auto operator<=>(const Outcome&, const Outcome&) = default;
};

/// A partition of the goods; bundles[i] lists player i's goods in ascending order.
struct Allocation {
  std::vector<std::vector<std::size_t>> bundles;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// One broken invariant; `path` locates it, e.g. "issues[3].utilities[1][0]".
struct Violation {
  std::string path;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::vector<Violation> validate(const DecisionInstance& instance);
std::vector<Violation> validate(const GoodsInstance& goods);

/// Throw ValidationError listing every violation, if any.
void require_valid(const DecisionInstance& instance);
void require_valid(const GoodsInstance& goods);

/// Throw ValidationError unless `outcome` picks one in-range alternative per issue.
void require_valid_outcome(const DecisionInstance& instance, const Outcome& outcome);
/// Throw ValidationError unless `allocation` partitions all goods among n players.
void require_valid_allocation(const GoodsInstance& goods, const Allocation& allocation);

/// Diagonal reduction: one issue per good with n alternatives; alternative i
/// gives u_i(g) to player i and 0 to everybody else.
DecisionInstance goods_to_public(const GoodsInstance& goods);

/// Outcome of goods_to_public(goods) that gives every good to its owner.
Outcome allocation_to_outcome(const GoodsInstance& goods, const Allocation& allocation);
/// Inverse of allocation_to_outcome: choice i on issue g gives good g to player i.
Allocation outcome_to_allocation(const GoodsInstance& goods, const Outcome& outcome);

Rational outcome_utility(const DecisionInstance& instance, const Outcome& outcome,
                         std::size_t player);
std::vector<Rational> outcome_utilities(const DecisionInstance& instance, const Outcome& outcome);

Rational bundle_utility(const GoodsInstance& goods, std::size_t player,
                        const std::vector<std::size_t>& bundle);
std::vector<Rational> allocation_utilities(const GoodsInstance& goods,
                                           const Allocation& allocation);

/// Per-issue best alternatives for one player.
struct MaxUtilityProfile {
  /// Non-ascending multiset of per-issue maxima.
  std::vector<Rational> sorted;
  /// per_issue[t] = max_a u_i^t(a).
  std::vector<Rational> per_issue;
  /// argmax[t]: lowest alternative index achieving per_issue[t].
  std::vector<std::size_t> argmax;
};

MaxUtilityProfile sorted_max_utilities(const DecisionInstance& instance, std::size_t player);

/// Goods counterpart: the player's utilities for all goods, non-ascending.
std::vector<Rational> sorted_good_utilities(const GoodsInstance& goods, std::size_t player);

/// Display label for a player, falling back to "p<i+1>".
std::string player_label(const std::vector<std::string>& names, std::size_t player);

}  // namespace fairdec

#endif  // FAIRDEC_MODEL_HPP_

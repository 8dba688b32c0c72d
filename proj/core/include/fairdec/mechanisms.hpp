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

#ifndef FAIRDEC_MECHANISMS_HPP_
#define FAIRDEC_MECHANISMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fairdec/enumeration.hpp"
#include "fairdec/model.hpp"
#include "fairdec/rational.hpp"

namespace fairdec {

struct RoundRobinPick {
  std::size_t player = 0;
  std::size_t issue = 0;
  std::size_t alternative = 0;

  friend bool operator==(const RoundRobinPick&, const RoundRobinPick&) = default;
};

struct RoundRobinTrace {
  std::vector<std::size_t> order;
  std::vector<RoundRobinPick> picks;

  friend bool operator==(const RoundRobinTrace&, const RoundRobinTrace&) = default;
};

struct LeximinTrace {
  /// Per-player divisor applied before comparison; nullopt marks an
  /// identically-zero player left out of the objective.
  std::vector<std::optional<Rational>> normalization;
  std::uint64_t nodes_visited = 0;

  friend bool operator==(const LeximinTrace&, const LeximinTrace&) = default;
};

struct NashTrace {
  /// Players with positive utility (the set S), ascending.
  std::vector<std::size_t> support;
  /// Product of the utilities of the players in `support` (1 when empty).
  Rational product;
  std::uint64_t nodes_visited = 0;

  friend bool operator==(const NashTrace&, const NashTrace&) = default;
};

using MechanismTrace = std::variant<std::monostate, RoundRobinTrace, LeximinTrace, NashTrace>;

struct MechanismResult {
  std::string mechanism;
  Outcome outcome;
  /// utilities[i] == outcome_utility(instance, outcome, i).
  std::vector<Rational> utilities;
  MechanismTrace trace;

  friend bool operator==(const MechanismResult&, const MechanismResult&) = default;
};

/// Players take turns in `order` (cyclically); on her turn a player fixes the
/// undecided issue with her highest best utility to her favourite alternative.
/// Ties go to the lowest issue index, then the lowest alternative index.
/// Throws ValidationError unless `order` is a permutation of [0, n).
MechanismResult round_robin(const DecisionInstance& instance, const std::vector<std::size_t>& order);

/// round_robin with the identity order 0, 1, ..., n-1.
MechanismResult round_robin(const DecisionInstance& instance);

/// Divisors used by the leximin objective: RRS_i when positive, else Prop_i
/// when positive, else nullopt (player has no positive utility anywhere).
std::vector<std::optional<Rational>> leximin_normalization(const DecisionInstance& instance);

/// Exact leximin over normalized utilities, by depth-first branch and bound.
/// Among optimal outcomes returns the lexicographically smallest choice vector.
/// Throws CapExceeded when the outcome space exceeds `cap`.
MechanismResult leximin(const DecisionInstance& instance, std::uint64_t cap = kDefaultOutcomeCap);

/// The set S of maximum-cardinality support (players that can simultaneously
/// get positive utility); ties go to the lexicographically smallest set.
/// Supports up to 64 players.
std::vector<std::size_t> max_support_set(const DecisionInstance& instance);

/// Maximum Nash welfare: pick S = max_support_set, then maximize the product of
/// utilities of S over outcomes that give all of S positive utility. Exact
/// rational products; ties go to the lexicographically smallest choice vector.
MechanismResult max_nash_welfare(const DecisionInstance& instance,
                                 std::uint64_t cap = kDefaultOutcomeCap);

/// Lexicographic comparison used for set tie-breaking: {0,2} < {1,2}.
bool lexicographically_smaller_set(const std::vector<std::size_t>& lhs,
                                   const std::vector<std::size_t>& rhs);

}  // namespace fairdec

#endif  // FAIRDEC_MECHANISMS_HPP_

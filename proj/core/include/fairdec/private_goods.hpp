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

#ifndef FAIRDEC_PRIVATE_GOODS_HPP_
#define FAIRDEC_PRIVATE_GOODS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fairdec/model.hpp"
#include "fairdec/rational.hpp"

namespace fairdec {

/// Positive per-player weights for weighted utilitarian welfare.
struct WeightVector {
  std::vector<Rational> values;

  /// (1/n, ..., 1/n).
  static WeightVector uniform(std::size_t players);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Gives each good to a player maximizing weight * utility (ties: lowest
/// player index). The result maximizes sum_i w_i * u_i(A_i).
/// Throws ValidationError on non-positive weights or a size mismatch.
Allocation weighted_welfare_allocation(const GoodsInstance& goods, const WeightVector& weights);

/// True when every good sits with a player maximizing weight * utility.
bool is_weighted_welfare_maximizer(const GoodsInstance& goods, const WeightVector& weights,
                                   const Allocation& allocation);

/// Weights of the DEC players are divided by `factor` because `from` was
/// about to tie with `to` on `good`.
struct WeightReduction {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t good = 0;
  Rational factor;
  /// Both sides of the ratio were zero and the ratio was taken to be 1.
  bool zero_over_zero = false;

  friend bool operator==(const WeightReduction&, const WeightReduction&) = default;
};

struct GoodTransfer {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t good = 0;

  friend bool operator==(const GoodTransfer&, const GoodTransfer&) = default;
};

/// One pass of the outer loop: grow DEC by tie creation, then walk the chain
/// of recorded ties back from the receiving player.
struct TransferRound {
  /// Players with more than, exactly, and fewer than p goods (the last set
  /// excludes players whose pessimistic share is zero).
  std::vector<std::size_t> above;
  std::vector<std::size_t> at;
  std::vector<std::size_t> below;
  /// DEC before the first reduction and after each one.
  std::vector<std::vector<std::size_t>> dec_snapshots;
  std::vector<WeightReduction> reductions;
  std::vector<GoodTransfer> transfers;
  /// sum over players below p of (p - |A_i|), before and after the round.
  std::size_t deficit_before = 0;
  std::size_t deficit_after = 0;

  friend bool operator==(const TransferRound&, const TransferRound&) = default;
};

struct TransferTrace {
  std::size_t p = 0;
  /// Players with a zero pessimistic share, never counted as short of goods.
  std::vector<std::size_t> exempt;
  std::vector<TransferRound> rounds;
  /// A 0/0 ratio was resolved as 1 somewhere in the run.
  bool zero_over_zero_used = false;

  friend bool operator==(const TransferTrace&, const TransferTrace&) = default;
};

struct PpsPoResult {
  Allocation allocation;
  WeightVector weights;
  TransferTrace trace;
};

/// Polynomial-time PPS + PO allocation: start from the equal-weight welfare
/// maximizer and repeatedly lower the weights of players holding more than
/// p = floor(m/n) goods until a chain of ties lets a player short of p goods
/// receive one. Every player with a positive pessimistic share ends with at
/// least p goods, and the allocation maximizes welfare under the returned
/// weights. Runs in O(n^2 m^2) rational operations.
///
/// Throws DegenerateInstance if every candidate ratio is infinite, which the
/// exemption of zero-share players rules out for valid instances.
PpsPoResult pps_po_allocate(const GoodsInstance& goods);

struct Prop1Loss {
  std::size_t round = 0;
  std::size_t player = 0;

  friend bool operator==(const Prop1Loss&, const Prop1Loss&) = default;
};

struct Prop1PoResult {
  Allocation allocation;
  WeightVector weights;
  bool certified_prop1 = false;
  std::size_t iterations = 0;
  /// Players that satisfied Prop1 before a round and lost it during the round.
  std::vector<Prop1Loss> losses;
  TransferTrace trace;
};

/// Experimental Prop1 + PO search. DEC starts from the players at or above
/// their proportional share and grows by tie creation until it absorbs a
/// player violating Prop1, who then receives a good along the tie chain.
/// Gives up after `max_iterations` rounds. The result always maximizes
/// weighted welfare; certified_prop1 reports whether Prop1 holds.
Prop1PoResult prop1_po_search(const GoodsInstance& goods, std::size_t max_iterations);

}  // namespace fairdec

#endif  // FAIRDEC_PRIVATE_GOODS_HPP_

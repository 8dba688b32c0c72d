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

#include "fairdec/private_goods.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

#include "fairdec/audit.hpp"
#include "fairdec/errors.hpp"

namespace fairdec {
namespace {

void require_weights(const GoodsInstance& goods, const WeightVector& weights) {
  if (weights.values.size() != goods.players) {
    throw ValidationError("expected " + std::to_string(goods.players) + " weights, got " +
                          std::to_string(weights.values.size()));
  }
  for (std::size_t i = 0; i < weights.values.size(); ++i) {
    if (weights.values[i].sign() <= 0) {
      throw ValidationError("weight of player " + std::to_string(i) + " must be positive");
    }
  }
}

std::vector<std::size_t> argmax_owners(const GoodsInstance& goods, const WeightVector& weights) {
  std::vector<std::size_t> owner(goods.goods, 0);
  for (std::size_t g = 0; g < goods.goods; ++g) {
    Rational best = weights.values[0] * goods.utilities[0][g];
    for (std::size_t i = 1; i < goods.players; ++i) {
      Rational v = weights.values[i] * goods.utilities[i][g];
      if (v > best) {
        best = std::move(v);
        owner[g] = i;
      }
    }
  }
  return owner;
}

Allocation to_allocation(std::size_t players, const std::vector<std::size_t>& owner) {
  Allocation out;
  out.bundles.resize(players);
  for (std::size_t g = 0; g < owner.size(); ++g) out.bundles[owner[g]].push_back(g);
  return out;
}

std::vector<std::size_t> members(const std::vector<bool>& set) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i]) out.push_back(i);
  }
  return out;
}

// Weighted-welfare state shared by the PPS and Prop1 transfer loops.
class TieChain {
 public:
  TieChain(const GoodsInstance& goods, WeightVector weights)
      : goods_(goods), weights_(std::move(weights)), owner_(argmax_owners(goods_, weights_)) {}

  const WeightVector& weights() const { return weights_; }
  const std::vector<std::size_t>& owner() const { return owner_; }
  Allocation allocation() const { return to_allocation(goods_.players, owner_); }

  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out(goods_.players, 0);
    for (std::size_t i : owner_) ++out[i];
    return out;
  }

  // Lowers DEC weights until DEC reaches a target. Returns the target that
  // joined, or nullopt when every remaining ratio is infinite.
  std::optional<std::size_t> grow(std::vector<bool> dec, const std::vector<bool>& targets,
                                  TransferRound& round, bool& zero_over_zero_used) {
    links_.assign(goods_.players, std::nullopt);
    round.dec_snapshots.push_back(members(dec));
    while (true) {
      for (std::size_t i = 0; i < goods_.players; ++i) {
        if (dec[i] && targets[i]) return i;
      }
      std::optional<Candidate> best;
      for (std::size_t i = 0; i < goods_.players; ++i) {
        if (!dec[i]) continue;
        for (std::size_t j = 0; j < goods_.players; ++j) {
          if (dec[j]) continue;
          for (std::size_t g = 0; g < goods_.goods; ++g) {
            if (owner_[g] != i) continue;
            std::optional<Candidate> c = ratio(i, j, g);
            if (c && (!best || c->factor < best->factor)) best = std::move(c);
          }
        }
      }
      if (!best) return std::nullopt;

      if (best->factor != Rational(1)) {
        for (std::size_t i = 0; i < goods_.players; ++i) {
          if (dec[i]) weights_.values[i] /= best->factor;
        }
      }
      zero_over_zero_used = zero_over_zero_used || best->zero_over_zero;
      round.reductions.push_back(
          WeightReduction{best->from, best->to, best->good, best->factor, best->zero_over_zero});
      dec[best->to] = true;
      links_[best->to] = std::make_pair(best->from, best->good);
      round.dec_snapshots.push_back(members(dec));
    }
  }

  // Moves goods along the recorded ties from `receiver` back to a stop player.
  void walk(std::size_t receiver, const std::vector<bool>& stop, TransferRound& round) {
    std::size_t j = receiver;
    while (!stop[j]) {
      const auto [from, good] = *links_[j];
      owner_[good] = j;
      round.transfers.push_back(GoodTransfer{from, j, good});
      j = from;
    }
  }

 private:
  struct Candidate {
    std::size_t from;
    std::size_t to;
    std::size_t good;
    Rational factor;
    bool zero_over_zero;
  };

  // (w_i u_i(g)) / (w_j u_j(g)); nullopt for +infinity, 1 for 0/0.
  std::optional<Candidate> ratio(std::size_t i, std::size_t j, std::size_t g) const {
    const Rational numerator = weights_.values[i] * goods_.utilities[i][g];
    const Rational denominator = weights_.values[j] * goods_.utilities[j][g];
    if (denominator.is_zero()) {
      if (!numerator.is_zero()) return std::nullopt;
      return Candidate{i, j, g, Rational(1), true};
    }
    return Candidate{i, j, g, numerator / denominator, false};
  }

  const GoodsInstance& goods_;
  WeightVector weights_;
  std::vector<std::size_t> owner_;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> links_;
};

Rational proportional_share(const GoodsInstance& goods, std::size_t player) {
  Rational total;
  for (const auto& v : goods.utilities[player]) total += v;
  return total / Rational(static_cast<std::int64_t>(goods.players));
}

}  // namespace

WeightVector WeightVector::uniform(std::size_t players) {
  return WeightVector{std::vector<Rational>(players, Rational(1, static_cast<std::int64_t>(players)))};
}

Allocation weighted_welfare_allocation(const GoodsInstance& goods, const WeightVector& weights) {
  require_valid(goods);
  require_weights(goods, weights);
  return to_allocation(goods.players, argmax_owners(goods, weights));
}

bool is_weighted_welfare_maximizer(const GoodsInstance& goods, const WeightVector& weights,
                                   const Allocation& allocation) {
  require_weights(goods, weights);
  require_valid_allocation(goods, allocation);
  for (std::size_t owner = 0; owner < goods.players; ++owner) {
    for (std::size_t g : allocation.bundles[owner]) {
      const Rational mine = weights.values[owner] * goods.utilities[owner][g];
      for (std::size_t j = 0; j < goods.players; ++j) {
        if (weights.values[j] * goods.utilities[j][g] > mine) return false;
      }
    }
  }
  return true;
}

PpsPoResult pps_po_allocate(const GoodsInstance& goods) {
  require_valid(goods);
  const std::size_t n = goods.players;
  const std::size_t p = goods.goods / n;

  TransferTrace trace;
  trace.p = p;
  std::vector<bool> exempt(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Rational> sorted = sorted_good_utilities(goods, i);
    Rational pps;
    for (std::size_t k = goods.goods - p; k < goods.goods; ++k) pps += sorted[k];
    if (pps.is_zero()) {
      exempt[i] = true;
      trace.exempt.push_back(i);
    }
  }

  auto deficit = [&](const std::vector<std::size_t>& counts) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!exempt[i] && counts[i] < p) total += p - counts[i];
    }
    return total;
  };

  TieChain state(goods, WeightVector::uniform(n));
  while (true) {
    const std::vector<std::size_t> counts = state.counts();
    std::vector<bool> above(n, false);
    std::vector<bool> below(n, false);
    TransferRound round;
    for (std::size_t i = 0; i < n; ++i) {
      if (counts[i] > p) {
        above[i] = true;
        round.above.push_back(i);
      } else if (counts[i] < p && !exempt[i]) {
        below[i] = true;
        round.below.push_back(i);
      } else {
        round.at.push_back(i);
      }
    }
    if (round.below.empty()) break;
    if (trace.rounds.size() >= goods.goods) {
      throw std::logic_error("pps_po_allocate exceeded m outer iterations");
    }
    round.deficit_before = deficit(counts);

    const std::optional<std::size_t> receiver =
        state.grow(above, below, round, trace.zero_over_zero_used);
    if (!receiver) {
      throw DegenerateInstance(
          "no finite weight reduction can pass a good to a player short of " + std::to_string(p) +
          " goods");
    }
    state.walk(*receiver, above, round);
    round.deficit_after = deficit(state.counts());
    trace.rounds.push_back(std::move(round));
  }
  return PpsPoResult{state.allocation(), state.weights(), std::move(trace)};
}

Prop1PoResult prop1_po_search(const GoodsInstance& goods, std::size_t max_iterations) {
  require_valid(goods);
  const std::size_t n = goods.players;
  std::vector<Rational> prop;
  for (std::size_t i = 0; i < n; ++i) prop.push_back(proportional_share(goods, i));

  TieChain state(goods, WeightVector::uniform(n));
  Prop1PoResult result;
  result.trace.p = goods.goods / n;

  auto prop1_flags = [&](const Allocation& allocation) {
    std::vector<bool> ok(n);
    for (std::size_t i = 0; i < n; ++i) {
      ok[i] = goods_prop1_alpha(goods, allocation, i).at_least(Rational(1));
    }
    return ok;
  };

  while (true) {
    const Allocation allocation = state.allocation();
    const std::vector<bool> ok = prop1_flags(allocation);
    std::vector<bool> violators(n);
    std::vector<bool> seeds(n);
    bool any_violator = false;
    bool any_seed = false;
    for (std::size_t i = 0; i < n; ++i) {
      violators[i] = !ok[i];
      any_violator = any_violator || violators[i];
      seeds[i] = bundle_utility(goods, i, allocation.bundles[i]) >= prop[i];
      any_seed = any_seed || seeds[i];
    }
    if (!any_violator) {
      result.certified_prop1 = true;
      break;
    }
    if (result.iterations >= max_iterations || !any_seed) break;

    TransferRound round;
    round.above = members(seeds);
    round.below = members(violators);
    for (std::size_t i = 0; i < n; ++i) {
      if (!seeds[i] && !violators[i]) round.at.push_back(i);
    }
    const std::optional<std::size_t> receiver =
        state.grow(seeds, violators, round, result.trace.zero_over_zero_used);
    if (!receiver) break;
    state.walk(*receiver, seeds, round);

    const std::vector<bool> after = prop1_flags(state.allocation());
    for (std::size_t i = 0; i < n; ++i) {
      if (ok[i] && !after[i]) result.losses.push_back(Prop1Loss{result.iterations, i});
    }
    result.trace.rounds.push_back(std::move(round));
    ++result.iterations;
  }

  result.allocation = state.allocation();
  result.weights = state.weights();
  return result;
}

}  // namespace fairdec

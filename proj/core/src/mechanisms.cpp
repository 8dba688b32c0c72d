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

#include "fairdec/mechanisms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "fairdec/errors.hpp"
#include "fairdec/shares.hpp"

namespace fairdec {
namespace {

// Sum over issues t' >= t of each tracked player's best value, for t in [0, m].
std::vector<std::vector<Rational>> suffix_maxima(
    const std::vector<std::vector<std::vector<Rational>>>& values) {
  const std::size_t m = values.size();
  const std::size_t players = m == 0 ? 0 : values.front().front().size();
  std::vector<std::vector<Rational>> out(m + 1, std::vector<Rational>(players));
  for (std::size_t t = m; t-- > 0;) {
    for (std::size_t k = 0; k < players; ++k) {
      Rational best = values[t][0][k];
      for (const auto& alternative : values[t]) best = std::max(best, alternative[k]);
      out[t][k] = out[t + 1][k] + best;
    }
  }
  return out;
}

// values[t][a][k]: utility of tracked player k for alternative a of issue t,
// after multiplying by scale[k].
std::vector<std::vector<std::vector<Rational>>> tracked_values(
    const DecisionInstance& instance, const std::vector<std::size_t>& tracked,
    const std::vector<Rational>& scale) {
  std::vector<std::vector<std::vector<Rational>>> out(instance.issue_count());
  for (std::size_t t = 0; t < instance.issue_count(); ++t) {
    const Issue& issue = instance.issues[t];
    out[t].assign(issue.alternative_count, std::vector<Rational>(tracked.size()));
    for (std::size_t a = 0; a < issue.alternative_count; ++a) {
      for (std::size_t k = 0; k < tracked.size(); ++k) {
        out[t][a][k] = issue.utility(tracked[k], a) * scale[k];
      }
    }
  }
  return out;
}

class LeximinSearch {
 public:
  explicit LeximinSearch(std::vector<std::vector<std::vector<Rational>>> values)
      : values_(std::move(values)),
        suffix_(suffix_maxima(values_)),
        partial_(suffix_.front().size()),
        choices_(values_.size(), 0) {}

  Outcome run() {
    descend(0);
    return best_outcome_;
  }

  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  void descend(std::size_t t) {
    ++nodes_;
    if (t == values_.size()) {
      std::vector<Rational> sorted = partial_;
      std::sort(sorted.begin(), sorted.end());
      if (!best_sorted_ || *best_sorted_ < sorted) {
        best_sorted_ = std::move(sorted);
        best_outcome_.choices = choices_;
      }
      return;
    }
    if (best_sorted_) {
      // Componentwise upper bounds sort to a lexicographic upper bound. A tie
      // with the incumbent cannot win either: the incumbent came first in
      // lexicographic order of choice vectors.
      std::vector<Rational> optimistic(partial_.size());
      for (std::size_t k = 0; k < partial_.size(); ++k) optimistic[k] = partial_[k] + suffix_[t][k];
      std::sort(optimistic.begin(), optimistic.end());
      if (!(*best_sorted_ < optimistic)) return;
    }
    for (std::size_t a = 0; a < values_[t].size(); ++a) {
      for (std::size_t k = 0; k < partial_.size(); ++k) partial_[k] += values_[t][a][k];
      choices_[t] = a;
      descend(t + 1);
      for (std::size_t k = 0; k < partial_.size(); ++k) partial_[k] -= values_[t][a][k];
    }
  }

  std::vector<std::vector<std::vector<Rational>>> values_;
  std::vector<std::vector<Rational>> suffix_;
  std::vector<Rational> partial_;
  std::vector<std::size_t> choices_;
  std::optional<std::vector<Rational>> best_sorted_;
  Outcome best_outcome_;
  std::uint64_t nodes_ = 0;
};

class NashSearch {
 public:
  explicit NashSearch(std::vector<std::vector<std::vector<Rational>>> values)
      : values_(std::move(values)),
        suffix_(suffix_maxima(values_)),
        partial_(suffix_.front().size()),
        choices_(values_.size(), 0) {}

  Outcome run() {
    descend(0);
    return best_outcome_;
  }

  const Rational& best_product() const { return best_product_; }
  std::uint64_t nodes_visited() const { return nodes_; }

 private:
  void descend(std::size_t t) {
    ++nodes_;
    if (t == values_.size()) {
      Rational product(1);
      for (const auto& u : partial_) {
        if (u.is_zero()) return;
        product *= u;
      }
      if (!found_ || product > best_product_) {
        found_ = true;
        best_log_ = log_of(product);
        best_product_ = std::move(product);
        best_outcome_.choices = choices_;
      }
      return;
    }

    std::vector<Rational> bound(partial_.size());
    for (std::size_t k = 0; k < partial_.size(); ++k) {
      bound[k] = partial_[k] + suffix_[t][k];
      if (bound[k].is_zero()) return;  // this player can no longer be made positive
    }
    if (found_ && !might_beat_incumbent(bound)) return;

    for (std::size_t a = 0; a < values_[t].size(); ++a) {
      for (std::size_t k = 0; k < partial_.size(); ++k) partial_[k] += values_[t][a][k];
      choices_[t] = a;
      descend(t + 1);
      for (std::size_t k = 0; k < partial_.size(); ++k) partial_[k] -= values_[t][a][k];
    }
  }

  // Log-domain screening first; the final word is always the exact product.
  bool might_beat_incumbent(const std::vector<Rational>& bound) const {
    if (std::isfinite(best_log_)) {
      double log_bound = 0.0;
      bool usable = true;
      for (const auto& b : bound) {
        const double v = b.to_double();
        if (!(v > 0.0) || !std::isfinite(v)) {
          usable = false;
          break;
        }
        log_bound += std::log(v);
      }
      if (usable && log_bound < best_log_ - 1e-9) return false;
    }
    Rational product(1);
    for (const auto& b : bound) product *= b;
    return product > best_product_;
  }

  static double log_of(const Rational& value) {
    const double v = value.to_double();
    return (v > 0.0 && std::isfinite(v)) ? std::log(v) : std::nan("");
  }

  std::vector<std::vector<std::vector<Rational>>> values_;
  std::vector<std::vector<Rational>> suffix_;
  std::vector<Rational> partial_;
  std::vector<std::size_t> choices_;
  bool found_ = false;
  Rational best_product_;
  double best_log_ = std::nan("");
  Outcome best_outcome_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::size_t> mask_to_players(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1U) out.push_back(i);
  }
  return out;
}

}  // namespace

MechanismResult round_robin(const DecisionInstance& instance, const std::vector<std::size_t>& order) {
  require_valid(instance);
  const std::size_t n = instance.players;
  {
    std::vector<bool> seen(n, false);
    bool ok = order.size() == n;
    for (std::size_t i : order) {
      if (i >= n || seen[i]) {
        ok = false;
        break;
      }
      seen[i] = true;
    }
    if (!ok) throw ValidationError("round robin order must be a permutation of 0.." + std::to_string(n - 1));
  }

  std::vector<MaxUtilityProfile> profiles;
  profiles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) profiles.push_back(sorted_max_utilities(instance, i));

  const std::size_t m = instance.issue_count();
  std::vector<bool> decided(m, false);
  RoundRobinTrace trace{order, {}};
  Outcome outcome;
  outcome.choices.assign(m, 0);
  for (std::size_t turn = 0; turn < m; ++turn) {
    const std::size_t player = order[turn % n];
    const MaxUtilityProfile& profile = profiles[player];
    std::optional<std::size_t> pick;
    for (std::size_t t = 0; t < m; ++t) {
      if (decided[t]) continue;
      if (!pick || profile.per_issue[t] > profile.per_issue[*pick]) pick = t;
    }
    decided[*pick] = true;
    outcome.choices[*pick] = profile.argmax[*pick];
    trace.picks.push_back({player, *pick, profile.argmax[*pick]});
  }

  MechanismResult result{"round-robin", outcome, outcome_utilities(instance, outcome), std::move(trace)};
  return result;
}

MechanismResult round_robin(const DecisionInstance& instance) {
  std::vector<std::size_t> order(instance.players);
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return round_robin(instance, order);
}

std::vector<std::optional<Rational>> leximin_normalization(const DecisionInstance& instance) {
  require_valid(instance);
  std::vector<std::optional<Rational>> out;
  out.reserve(instance.players);
  for (std::size_t i = 0; i < instance.players; ++i) {
    Rational rrs = rrs_share(instance, i);
    if (rrs.sign() > 0) {
      out.emplace_back(std::move(rrs));
      continue;
    }
    Rational prop = prop_share(instance, i);
    if (prop.sign() > 0) {
      out.emplace_back(std::move(prop));
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

MechanismResult leximin(const DecisionInstance& instance, std::uint64_t cap) {
  require_valid(instance);
  require_outcome_space_within(instance, cap, "leximin");

  const auto normalization = leximin_normalization(instance);
  std::vector<std::size_t> tracked;
  std::vector<Rational> scale;
  for (std::size_t i = 0; i < instance.players; ++i) {
    if (!normalization[i]) continue;
    tracked.push_back(i);
    scale.push_back(Rational(1) / *normalization[i]);
  }

  LeximinSearch search(tracked_values(instance, tracked, scale));
  Outcome outcome = search.run();
  LeximinTrace trace{normalization, search.nodes_visited()};
  return MechanismResult{"leximin", outcome, outcome_utilities(instance, outcome), std::move(trace)};
}

bool lexicographically_smaller_set(const std::vector<std::size_t>& lhs,
                                   const std::vector<std::size_t>& rhs) {
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

std::vector<std::size_t> max_support_set(const DecisionInstance& instance) {
  require_valid(instance);
  if (instance.players > 64) {
    throw ValidationError("support search handles at most 64 players");
  }
  // Reachable supports, issue by issue: the union of one positive-set per issue.
  std::vector<std::uint64_t> reachable{0};
  for (const Issue& issue : instance.issues) {
    std::vector<std::uint64_t> masks(issue.alternative_count, 0);
    for (std::size_t a = 0; a < issue.alternative_count; ++a) {
      for (std::size_t i = 0; i < instance.players; ++i) {
        if (issue.utility(i, a).sign() > 0) masks[a] |= std::uint64_t{1} << i;
      }
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::vector<std::uint64_t> next;
    next.reserve(reachable.size() * masks.size());
    for (std::uint64_t r : reachable) {
      for (std::uint64_t mask : masks) next.push_back(r | mask);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    reachable = std::move(next);
  }

  std::vector<std::size_t> best = mask_to_players(reachable.front());
  for (std::uint64_t mask : reachable) {
    std::vector<std::size_t> candidate = mask_to_players(mask);
    if (candidate.size() > best.size() ||
        (candidate.size() == best.size() && lexicographically_smaller_set(candidate, best))) {
      best = std::move(candidate);
    }
  }
  return best;
}

MechanismResult max_nash_welfare(const DecisionInstance& instance, std::uint64_t cap) {
  require_valid(instance);
  require_outcome_space_within(instance, cap, "max nash welfare");

  std::vector<std::size_t> support = max_support_set(instance);
  NashSearch search(
      tracked_values(instance, support, std::vector<Rational>(support.size(), Rational(1))));
  Outcome outcome = search.run();
  NashTrace trace{support, search.best_product(), search.nodes_visited()};
  return MechanismResult{"mnw", outcome, outcome_utilities(instance, outcome), std::move(trace)};
}

}  // namespace fairdec

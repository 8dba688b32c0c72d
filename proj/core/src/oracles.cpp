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

#include "fairdec/oracles.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "fairdec/errors.hpp"

namespace fairdec {
namespace {

std::vector<std::size_t> positive_players(const std::vector<Rational>& utilities) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    if (utilities[i].sign() > 0) out.push_back(i);
  }
  return out;
}

MechanismResult nash_by_enumeration(const DecisionInstance& instance, std::uint64_t cap) {
  // Phase 1: the largest support any outcome reaches (ties: smallest set).
  std::vector<std::size_t> support;
  std::uint64_t visited = 0;
  {
    OutcomeEnumerator it(instance, cap);
    bool first = true;
    for (Outcome c; it.next(c);) {
      ++visited;
      std::vector<std::size_t> s = positive_players(outcome_utilities(instance, c));
      if (first || s.size() > support.size() ||
          (s.size() == support.size() && lexicographically_smaller_set(s, support))) {
        support = std::move(s);
        first = false;
      }
    }
  }

  // Phase 2: maximize the product over S among outcomes positive on all of S.
  std::optional<Outcome> best;
  Rational best_product;
  OutcomeEnumerator it(instance, cap);
  for (Outcome c; it.next(c);) {
    ++visited;
    const std::vector<Rational> u = outcome_utilities(instance, c);
    Rational product(1);
    bool positive = true;
    for (std::size_t i : support) {
      if (u[i].sign() <= 0) positive = false;
      product *= u[i];
    }
    if (!positive) continue;
    if (!best || product > best_product) {
      best = c;
      best_product = std::move(product);
    }
  }
  NashTrace trace{support, best_product, visited};
  return MechanismResult{"mnw", *best, outcome_utilities(instance, *best), std::move(trace)};
}

MechanismResult leximin_by_enumeration(const DecisionInstance& instance, std::uint64_t cap) {
  const auto normalization = leximin_normalization(instance);
  std::optional<Outcome> best;
  std::vector<Rational> best_sorted;
  std::uint64_t visited = 0;
  OutcomeEnumerator it(instance, cap);
  for (Outcome c; it.next(c);) {
    ++visited;
    const std::vector<Rational> u = outcome_utilities(instance, c);
    std::vector<Rational> normalized;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (normalization[i]) normalized.push_back(u[i] / *normalization[i]);
    }
    std::sort(normalized.begin(), normalized.end());
    if (!best || best_sorted < normalized) {
      best = c;
      best_sorted = std::move(normalized);
    }
  }
  LeximinTrace trace{normalization, visited};
  return MechanismResult{"leximin", *best, outcome_utilities(instance, *best), std::move(trace)};
}

MechanismResult utilitarian_by_enumeration(const DecisionInstance& instance, std::uint64_t cap) {
  std::optional<Outcome> best;
  Rational best_total;
  OutcomeEnumerator it(instance, cap);
  for (Outcome c; it.next(c);) {
    Rational total;
    for (const auto& u : outcome_utilities(instance, c)) total += u;
    if (!best || total > best_total) {
      best = c;
      best_total = std::move(total);
    }
  }
  return MechanismResult{"utilitarian", *best, outcome_utilities(instance, *best), std::monostate{}};
}

bool dominates(const std::vector<Rational>& lhs, const std::vector<Rational>& rhs) {
  bool strict = false;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] < rhs[i]) return false;
    if (lhs[i] > rhs[i]) strict = true;
  }
  return strict;
}

}  // namespace

std::string_view objective_name(Objective objective) {
  switch (objective) {
    case Objective::kNash: return "nash";
    case Objective::kLeximin: return "leximin";
    case Objective::kUtilitarian: return "utilitarian";
  }
  return "?";
}

Objective parse_objective(std::string_view name) {
  for (Objective o : {Objective::kNash, Objective::kLeximin, Objective::kUtilitarian}) {
    if (objective_name(o) == name) return o;
  }
  throw ValidationError("unknown objective '" + std::string(name) + "'");
}

MechanismResult exact_optimum(const DecisionInstance& instance, Objective objective,
                              std::uint64_t cap) {
  require_valid(instance);
  switch (objective) {
    case Objective::kNash: return nash_by_enumeration(instance, cap);
    case Objective::kLeximin: return leximin_by_enumeration(instance, cap);
    case Objective::kUtilitarian: return utilitarian_by_enumeration(instance, cap);
  }
  throw ValidationError("unknown objective");
}

std::vector<FrontierPoint> pareto_frontier(const DecisionInstance& instance, std::uint64_t cap) {
  std::vector<FrontierPoint> distinct;
  OutcomeEnumerator it(instance, cap);
  for (Outcome c; it.next(c);) {
    std::vector<Rational> u = outcome_utilities(instance, c);
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const FrontierPoint& p) { return p.utilities == u; });
    if (!seen) distinct.push_back(FrontierPoint{c, std::move(u)});
  }
  std::vector<FrontierPoint> out;
  for (const auto& candidate : distinct) {
    const bool dominated = std::any_of(distinct.begin(), distinct.end(), [&](const FrontierPoint& p) {
      return dominates(p.utilities, candidate.utilities);
    });
    if (!dominated) out.push_back(candidate);
  }
  return out;
}

std::vector<Allocation> weighted_welfare_maximizers(const GoodsInstance& goods,
                                                    const WeightVector& weights,
                                                    std::uint64_t cap) {
  require_valid(goods);
  if (weights.values.size() != goods.players) throw ValidationError("weight vector size mismatch");
  std::vector<std::vector<std::size_t>> winners(goods.goods);
  for (std::size_t g = 0; g < goods.goods; ++g) {
    Rational best = weights.values[0] * goods.utilities[0][g];
    for (std::size_t i = 1; i < goods.players; ++i) {
      best = std::max(best, weights.values[i] * goods.utilities[i][g]);
    }
    for (std::size_t i = 0; i < goods.players; ++i) {
      if (weights.values[i] * goods.utilities[i][g] == best) winners[g].push_back(i);
    }
  }

  // The tie-breakings form a product space; walk it as a public instance.
  DecisionInstance ties;
  ties.players = 1;
  for (const auto& w : winners) {
    Issue issue;
    issue.alternative_count = w.size();
    issue.utilities.assign(1, std::vector<Rational>(w.size()));
    ties.issues.push_back(std::move(issue));
  }
  std::vector<Allocation> out;
  OutcomeEnumerator it(ties, cap);
  for (Outcome c; it.next(c);) {
    Allocation a;
    a.bundles.resize(goods.players);
    for (std::size_t g = 0; g < goods.goods; ++g) a.bundles[winners[g][c.choices[g]]].push_back(g);
    out.push_back(std::move(a));
  }
  return out;
}

ProductBound feasible_product_lower_bound(const std::vector<Rational>& xs, const Rational& delta) {
  if (delta.sign() <= 0 || delta >= Rational(1)) throw ValidationError("delta must lie in (0, 1)");
  Rational deficit;
  Rational product(1);
  for (const auto& x : xs) {
    if (x.sign() < 0) throw ValidationError("values must be non-negative");
    if (x < Rational(1)) deficit += Rational(1) - x;
    product *= x;
  }
  return ProductBound{deficit <= delta, product >= Rational(1) - delta};
}

}  // namespace fairdec

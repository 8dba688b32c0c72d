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

#include "fairdec/audit.hpp"

#include <algorithm>

#include "fairdec/errors.hpp"

namespace fairdec {
namespace {

AxiomVerdict verdict(Alpha alpha) {
  const bool ok = alpha.at_least(Rational(1));
  return AxiomVerdict{ok, std::move(alpha)};
}

Alpha min_of(const Alpha& lhs, const Alpha& rhs) { return rhs < lhs ? rhs : lhs; }

}  // namespace

Alpha Alpha::ratio(const Rational& numerator, const Rational& denominator) {
  if (denominator.is_zero()) return unbounded();
  return of(numerator / denominator);
}

std::strong_ordering operator<=>(const Alpha& lhs, const Alpha& rhs) {
  if (lhs.is_unbounded() || rhs.is_unbounded()) {
    return static_cast<int>(lhs.is_unbounded()) <=> static_cast<int>(rhs.is_unbounded());
  }
  return lhs.value() <=> rhs.value();
}

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kProp: return "Prop";
    case Axiom::kProp1: return "Prop1";
    case Axiom::kRrs: return "RRS";
    case Axiom::kPps: return "PPS";
    case Axiom::kMms: return "MMS";
    case Axiom::kEf: return "EF";
    case Axiom::kEf1: return "EF1";
  }
  return "?";
}

const AxiomVerdict* PlayerAudit::find(Axiom axiom) const {
  switch (axiom) {
    case Axiom::kProp: return &prop;
    case Axiom::kProp1: return &prop1;
    case Axiom::kRrs: return &rrs;
    case Axiom::kPps: return &pps;
    case Axiom::kMms: return mms ? &*mms : nullptr;
    case Axiom::kEf: return ef ? &*ef : nullptr;
    case Axiom::kEf1: return ef1 ? &*ef1 : nullptr;
  }
  return nullptr;
}

bool AuditReport::all_satisfy(Axiom axiom) const {
  return std::all_of(players.begin(), players.end(), [axiom](const PlayerAudit& p) {
    const AxiomVerdict* v = p.find(axiom);
    return v != nullptr && v->satisfied;
  });
}

bool AuditReport::all_at_least(Axiom axiom, const Rational& threshold) const {
  return std::all_of(players.begin(), players.end(), [&](const PlayerAudit& p) {
    const AxiomVerdict* v = p.find(axiom);
    return v != nullptr && v->alpha.at_least(threshold);
  });
}

Alpha AuditReport::min_alpha(Axiom axiom) const {
  Alpha out = Alpha::unbounded();
  for (const auto& p : players) {
    if (const AxiomVerdict* v = p.find(axiom)) out = min_of(out, v->alpha);
  }
  return out;
}

Alpha prop1_alpha(const DecisionInstance& instance, const Outcome& outcome, std::size_t player) {
  const Rational prop = prop_share(instance, player);
  if (prop.is_zero()) return Alpha::unbounded();
  const MaxUtilityProfile profile = sorted_max_utilities(instance, player);
  const Rational u = outcome_utility(instance, outcome, player);
  Rational best = u;
  for (std::size_t t = 0; t < instance.issue_count(); ++t) {
    Rational switched = u - instance.utility(player, t, outcome.choices[t]) + profile.per_issue[t];
    if (switched > best) best = std::move(switched);
  }
  return Alpha::ratio(best, prop);
}

Alpha goods_prop1_alpha(const GoodsInstance& goods, const Allocation& allocation,
                        std::size_t player) {
  const auto& row = goods.utilities.at(player);
  Rational total;
  for (const auto& v : row) total += v;
  const Rational prop = total / Rational(static_cast<std::int64_t>(goods.players));
  if (prop.is_zero()) return Alpha::unbounded();

  const auto& bundle = allocation.bundles.at(player);
  std::vector<bool> owned(goods.goods, false);
  for (std::size_t g : bundle) owned[g] = true;
  const Rational u = bundle_utility(goods, player, bundle);
  Rational best_missing;
  for (std::size_t g = 0; g < goods.goods; ++g) {
    if (!owned[g] && row[g] > best_missing) best_missing = row[g];
  }
  return Alpha::ratio(u + best_missing, prop);
}

bool goods_prop1_holds(const GoodsInstance& goods, const Allocation& allocation) {
  for (std::size_t i = 0; i < goods.players; ++i) {
    if (!goods_prop1_alpha(goods, allocation, i).at_least(Rational(1))) return false;
  }
  return true;
}

bool is_ef1(const GoodsInstance& goods, const Allocation& allocation) {
  for (std::size_t i = 0; i < goods.players; ++i) {
    const Rational own = bundle_utility(goods, i, allocation.bundles[i]);
    for (std::size_t j = 0; j < goods.players; ++j) {
      if (i == j) continue;
      Rational other;
      Rational best;
      for (std::size_t g : allocation.bundles[j]) {
        other += goods.utilities[i][g];
        best = std::max(best, goods.utilities[i][g]);
      }
      if (own < other - best) return false;
    }
  }
  return true;
}

ParetoVerdict check_pareto_optimal(const DecisionInstance& instance, const Outcome& outcome,
                                   std::uint64_t cap) {
  const std::vector<Rational> base = outcome_utilities(instance, outcome);
  OutcomeEnumerator it(instance, cap);
  for (Outcome candidate; it.next(candidate);) {
    const std::vector<Rational> u = outcome_utilities(instance, candidate);
    bool weakly_better = true;
    bool strictly_better = false;
    for (std::size_t i = 0; i < u.size() && weakly_better; ++i) {
      if (u[i] < base[i]) weakly_better = false;
      if (u[i] > base[i]) strictly_better = true;
    }
    if (weakly_better && strictly_better) return ParetoVerdict{false, candidate, std::nullopt};
  }
  return ParetoVerdict{};
}

AuditReport audit(const DecisionInstance& instance, const Outcome& outcome,
                  const AuditOptions& options) {
  require_valid(instance);
  require_valid_outcome(instance, outcome);
  const ShareProfile shares = share_profile(instance, options.with_mms, options.mms_cap);
  const std::vector<Rational> utilities = outcome_utilities(instance, outcome);

  AuditReport report;
  report.player_names = instance.player_names;
  report.players.reserve(instance.players);
  for (std::size_t i = 0; i < instance.players; ++i) {
    const PlayerShares& s = shares.players[i];
    PlayerAudit p;
    p.utility = utilities[i];
    p.prop = verdict(Alpha::ratio(utilities[i], s.prop));
    p.prop1 = verdict(prop1_alpha(instance, outcome, i));
    p.rrs = verdict(Alpha::ratio(utilities[i], s.rrs));
    p.pps = verdict(Alpha::ratio(utilities[i], s.pps));
    if (s.mms) p.mms = verdict(Alpha::ratio(utilities[i], *s.mms));
    report.players.push_back(std::move(p));
  }
  if (options.with_po) report.po = check_pareto_optimal(instance, outcome, options.po_cap);
  return report;
}

AuditReport audit_goods(const GoodsInstance& goods, const Allocation& allocation,
                        const AuditOptions& options) {
  require_valid(goods);
  require_valid_allocation(goods, allocation);
  const DecisionInstance image = goods_to_public(goods);
  AuditReport report = audit(image, allocation_to_outcome(goods, allocation), options);
  report.player_names = goods.player_names;
  if (report.po && report.po->witness) {
    report.po->witness_allocation = outcome_to_allocation(goods, *report.po->witness);
  }

  const std::vector<Rational> utilities = allocation_utilities(goods, allocation);
  for (std::size_t i = 0; i < goods.players; ++i) {
    PlayerAudit& p = report.players[i];
    p.prop1 = verdict(goods_prop1_alpha(goods, allocation, i));
    Alpha ef = Alpha::unbounded();
    Alpha ef1 = Alpha::unbounded();
    for (std::size_t j = 0; j < goods.players; ++j) {
      if (i == j) continue;
      Rational other;
      Rational best;
      for (std::size_t g : allocation.bundles[j]) {
        other += goods.utilities[i][g];
        best = std::max(best, goods.utilities[i][g]);
      }
      ef = min_of(ef, Alpha::ratio(utilities[i], other));
      ef1 = min_of(ef1, Alpha::ratio(utilities[i], other - best));
    }
    p.ef = verdict(std::move(ef));
    p.ef1 = verdict(std::move(ef1));
  }
  return report;
}

}  // namespace fairdec

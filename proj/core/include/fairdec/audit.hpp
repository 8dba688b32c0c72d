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

#ifndef FAIRDEC_AUDIT_HPP_
#define FAIRDEC_AUDIT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fairdec/enumeration.hpp"
#include "fairdec/model.hpp"
#include "fairdec/rational.hpp"
#include "fairdec/shares.hpp"

namespace fairdec {

/// alpha-level of an axiom: how large a fraction of the reference value the
/// player receives. Unbounded when the reference value is zero.
class Alpha {
 public:
  static Alpha unbounded() { return Alpha(); }
  static Alpha of(Rational value) { return Alpha(std::move(value)); }
  /// numerator / denominator, or Unbounded when denominator is zero.
  static Alpha ratio(const Rational& numerator, const Rational& denominator);

  bool is_unbounded() const { return !value_.has_value(); }
  /// Precondition: !is_unbounded().
  const Rational& value() const { return *value_; }

  /// Unbounded compares greater than every rational.
  bool at_least(const Rational& threshold) const { return is_unbounded() || *value_ >= threshold; }

  std::string to_string() const { return is_unbounded() ? "unbounded" : value_->to_string(); }

  friend bool operator==(const Alpha&, const Alpha&) = default;
  friend std::strong_ordering operator<=>(const Alpha& lhs, const Alpha& rhs);

 private:
  Alpha() = default;
  explicit Alpha(Rational value) : value_(std::move(value)) {}
  std::optional<Rational> value_;
};

enum class Axiom { kProp, kProp1, kRrs, kPps, kMms, kEf, kEf1 };
inline constexpr std::array<Axiom, 7> kAllAxioms = {Axiom::kProp, Axiom::kProp1, Axiom::kRrs,
                                                    Axiom::kPps,  Axiom::kMms,   Axiom::kEf,
                                                    Axiom::kEf1};
std::string_view axiom_name(Axiom axiom);

struct AxiomVerdict {
  bool satisfied = false;
  Alpha alpha = Alpha::unbounded();

  friend bool operator==(const AxiomVerdict&, const AxiomVerdict&) = default;
};

struct PlayerAudit {
  Rational utility;
  AxiomVerdict prop;
  AxiomVerdict prop1;
  AxiomVerdict rrs;
  AxiomVerdict pps;
  std::optional<AxiomVerdict> mms;
  std::optional<AxiomVerdict> ef;
  std::optional<AxiomVerdict> ef1;

  /// nullptr when the axiom was not audited.
  const AxiomVerdict* find(Axiom axiom) const;

  friend bool operator==(const PlayerAudit&, const PlayerAudit&) = default;
};

struct ParetoVerdict {
  bool satisfied = true;
  /// First dominating outcome in lexicographic order, if any.
  std::optional<Outcome> witness;
  /// Goods audits: the witness as an allocation.
  std::optional<Allocation> witness_allocation;

  friend bool operator==(const ParetoVerdict&, const ParetoVerdict&) = default;
};

struct AuditReport {
  std::vector<PlayerAudit> players;
  std::vector<std::string> player_names;
  std::optional<ParetoVerdict> po;

  /// True when every player satisfies `axiom` (false if not audited).
  bool all_satisfy(Axiom axiom) const;
  /// True when every player has alpha >= threshold for `axiom`.
  bool all_at_least(Axiom axiom, const Rational& threshold) const;
  /// Smallest alpha across players (Unbounded if all are).
  Alpha min_alpha(Axiom axiom) const;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

struct AuditOptions {
  bool with_mms = false;
  std::uint64_t mms_cap = kDefaultMmsCap;
  bool with_po = false;
  std::uint64_t po_cap = kDefaultOutcomeCap;
};

/// Public-decision audit of Prop, Prop1 (switch one issue), RRS, PPS and
/// optionally MMS and PO.
AuditReport audit(const DecisionInstance& instance, const Outcome& outcome,
                  const AuditOptions& options = {});

/// Goods audit: EF and EF1 per player, Prop1 in its "add one good" form, the
/// remaining axioms on the goods_to_public image.
AuditReport audit_goods(const GoodsInstance& goods, const Allocation& allocation,
                        const AuditOptions& options = {});

/// Exhaustive Pareto check. Throws CapExceeded when the outcome space is too large.
ParetoVerdict check_pareto_optimal(const DecisionInstance& instance, const Outcome& outcome,
                                   std::uint64_t cap = kDefaultOutcomeCap);

/// alpha(Prop1) in the public form: max over issues of
/// (u_i(c) - u_i^t(c) + u^t_max(i)) / Prop_i.
Alpha prop1_alpha(const DecisionInstance& instance, const Outcome& outcome, std::size_t player);

/// alpha(Prop1) in the goods form: (u_i(A_i) + best good outside A_i) / Prop_i.
Alpha goods_prop1_alpha(const GoodsInstance& goods, const Allocation& allocation,
                        std::size_t player);

/// True when Prop1 (goods form) holds for every player.
bool goods_prop1_holds(const GoodsInstance& goods, const Allocation& allocation);

/// True when for every pair (i, j) player i is not envious of j up to one good.
bool is_ef1(const GoodsInstance& goods, const Allocation& allocation);

}  // namespace fairdec

#endif  // FAIRDEC_AUDIT_HPP_

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

#ifndef FAIRDEC_IO_HPP_
#define FAIRDEC_IO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairdec/audit.hpp"
#include "fairdec/mechanisms.hpp"
#include "fairdec/model.hpp"
#include "fairdec/private_goods.hpp"
#include "fairdec/rational.hpp"

namespace fairdec {

using AnyInstance = std::variant<DecisionInstance, GoodsInstance>;

struct ParseOptions {
  /// Accept JSON floats and decimal strings such as "0.25" as exact rationals.
  bool lossless_decimal = false;
};

struct ParsedInstance {
  AnyInstance instance;
  /// Non-fatal findings, e.g. a non-canonical rational that was normalized.
  std::vector<std::string> warnings;
};

/// Reads an instance document. Throws ValidationError on malformed JSON,
/// dimension mismatches, floats (unless allowed) and invalid instances.
ParsedInstance parse_instance(std::string_view text, const ParseOptions& options = {});

/// Canonical JSON: sorted keys, two-space indent, trailing newline. Missing
/// names are filled with p1.., t1.., a1.., g1...
std::string emit_instance(const DecisionInstance& instance);
std::string emit_instance(const GoodsInstance& goods);
std::string emit_instance(const AnyInstance& instance);

/// Exact rational in document form: a JSON integer when integral, else "p/q".
std::string emit_rational(const Rational& value);

/// Output of `solve`: an outcome (public) or an allocation (goods) plus
/// whatever the mechanism reports about itself.
struct ResultDocument {
  std::string mechanism;
  std::optional<Outcome> outcome;
  std::optional<Allocation> allocation;
  std::vector<Rational> utilities;
  std::optional<WeightVector> weights;
  std::optional<bool> certified_prop1;
  /// Canonical JSON of the trace object; empty when there is none.
  std::string trace_json;
  std::optional<AuditReport> audit;
  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

std::string trace_to_json(const MechanismTrace& trace);
std::string trace_to_json(const TransferTrace& trace);

std::string emit_result(const ResultDocument& result);
/// Throws ValidationError on malformed documents. Does not check the result
/// against any instance.
ResultDocument parse_result(std::string_view text);

std::string emit_report_json(const AuditReport& report);
AuditReport parse_report(std::string_view text);
/// One block per player, one line per axiom, e.g. "  Prop1: VIOLATED (α = 1/2)".
std::string emit_report_text(const AuditReport& report);
/// One row per (player, axiom).
std::string emit_report_csv(const AuditReport& report);

/// Aggregate over a batch of audited runs of one mechanism.
struct BenchRow {
  std::string mechanism;
  std::size_t trials = 0;
  /// Number of trials in which every player satisfied the axiom.
  std::size_t po_ok = 0;
  std::size_t pps_ok = 0;
  std::size_t rrs_ok = 0;
  std::size_t prop1_ok = 0;
  /// Smallest alpha seen over all trials and players.
  Alpha min_pps = Alpha::unbounded();
  Alpha min_rrs = Alpha::unbounded();
  Alpha min_prop1 = Alpha::unbounded();
};

/// Header plus one line per row; rates are printed with four decimals.
std::string emit_bench_csv(const std::vector<BenchRow>& rows);
std::string emit_bench_text(const std::vector<BenchRow>& rows);

}  // namespace fairdec

#endif  // FAIRDEC_IO_HPP_

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

#include "fairdec/io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "fairdec/errors.hpp"

namespace fairdec {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path.empty() ? message : path + ": " + message);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

// Quotes every JSON number that has a fraction or exponent so it reaches the
// rational reader as text instead of a lossy double.
std::string quote_decimal_numbers(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 16);
  bool in_string = false;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (in_string) {
      out += c;
      if (c == '\\' && i + 1 < text.size()) {
        out += text[i + 1];
        i += 2;
        continue;
      }
      if (c == '"') in_string = false;
      ++i;
      continue;
    }
    if (c == '"') {
      in_string = true;
      out += c;
      ++i;
      continue;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = i + 1;
      while (end < text.size() && (std::isdigit(static_cast<unsigned char>(text[end])) ||
                                   text[end] == '.' || text[end] == 'e' || text[end] == 'E' ||
                                   text[end] == '+' || text[end] == '-')) {
        ++end;
      }
      const std::string_view token = text.substr(i, end - i);
      if (token.find_first_of(".eE") != std::string_view::npos) {
        out += '"';
        out += token;
        out += '"';
      } else {
        out += token;
      }
      i = end;
      continue;
    }
    out += c;
    ++i;
  }
  return out;
}

bool fits_int64(const Rational& value) {
  if (!value.is_integer()) return false;
  const mpz_class num = value.get().get_num();
  return num.fits_slong_p() && sizeof(long) == sizeof(std::int64_t);
}

json rational_json(const Rational& value) {
  if (fits_int64(value)) return json(static_cast<std::int64_t>(value.get().get_num().get_si()));
  return json(value.to_string());
}

class RationalReader {
 public:
  RationalReader(const ParseOptions& options, std::vector<std::string>* warnings)
      : options_(options), warnings_(warnings) {}

  Rational read(const json& v, const std::string& path) const {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
          return Rational(static_cast<std::int64_t>(u));
        }
        return Rational::parse(std::to_string(u));
      }
      return Rational(v.get<std::int64_t>());
    }
    if (v.is_number_float()) {
      fail(path, "floating-point number not allowed; write it as \"p/q\" or enable lossless decimals");
    }
    if (!v.is_string()) fail(path, "expected a rational (integer or \"p/q\" string)");
    const auto text = v.get<std::string>();
    Rational value;
    try {
      const bool decimal = text.find_first_of(".eE") != std::string::npos;
      if (decimal && !options_.lossless_decimal) {
        fail(path, "decimal '" + text + "' not allowed; write it as \"p/q\" or enable lossless decimals");
      }
      value = decimal ? Rational::parse_decimal(text) : Rational::parse(text);
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
    const json canonical = rational_json(value);
    const bool same = canonical.is_string() && canonical.get<std::string>() == text;
    if (!same && warnings_ != nullptr) {
      warnings_->push_back(path + ": non-canonical rational '" + text + "' read as " +
                           value.to_string());
    }
    return value;
  }

 private:
  ParseOptions options_;
  std::vector<std::string>* warnings_;
};

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key '") + key + "'");
  return *it;
}

const json& array_member(const json& obj, const char* key, const std::string& path) {
  const json& v = member(obj, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

std::vector<std::string> string_list(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) fail(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

std::size_t read_index(const json& v, const std::string& path) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    fail(path, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of indices");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(read_index(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

bool read_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) fail(path, "expected true or false");
  return v.get<bool>();
}

std::vector<std::vector<Rational>> read_matrix(const json& v, std::size_t rows, std::size_t cols,
                                               const std::string& path,
                                               const RationalReader& reader) {
  if (!v.is_array()) fail(path, "expected an array of rows");
  if (v.size() != rows) {
    fail(path, "expected " + std::to_string(rows) + " rows (one per player), got " +
                   std::to_string(v.size()));
  }
  std::vector<std::vector<Rational>> out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!v[i].is_array()) fail(row_path, "expected an array");
    if (v[i].size() != cols) {
      fail(row_path, "expected " + std::to_string(cols) + " entries, got " +
                         std::to_string(v[i].size()));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      out[i].push_back(reader.read(v[i][j], row_path + "[" + std::to_string(j) + "]"));
    }
  }
  return out;
}

void warn_unknown_keys(const json& obj, std::initializer_list<const char*> known,
                       const std::string& path, std::vector<std::string>& warnings) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool found = false;
    for (const char* k : known) found = found || it.key() == k;
    if (!found) warnings.push_back((path.empty() ? "" : path + ": ") + "unknown key '" + it.key() + "' ignored");
  }
}

DecisionInstance read_public(const json& doc, const RationalReader& reader,
                             std::vector<std::string>& warnings) {
  DecisionInstance out;
  out.player_names = string_list(member(doc, "players", ""), "players");
  out.players = out.player_names.size();
  const json& issues = array_member(doc, "issues", "");
  for (std::size_t t = 0; t < issues.size(); ++t) {
    const std::string path = "issues[" + std::to_string(t) + "]";
    const json& item = issues[t];
    if (!item.is_object()) fail(path, "expected an object");
    warn_unknown_keys(item, {"name", "alternatives", "utilities"}, path, warnings);
    Issue issue;
    const json& name = member(item, "name", path);
    if (!name.is_string()) fail(path + ".name", "expected a string");
    issue.name = name.get<std::string>();
    issue.alternative_names = string_list(member(item, "alternatives", path), path + ".alternatives");
    issue.alternative_count = issue.alternative_names.size();
    issue.utilities = read_matrix(member(item, "utilities", path), out.players,
                                  issue.alternative_count, path + ".utilities", reader);
    out.issues.push_back(std::move(issue));
  }
  return out;
}

GoodsInstance read_goods(const json& doc, const RationalReader& reader) {
  GoodsInstance out;
  out.player_names = string_list(member(doc, "players", ""), "players");
  out.players = out.player_names.size();
  out.good_names = string_list(member(doc, "goods", ""), "goods");
  out.goods = out.good_names.size();
  out.utilities = read_matrix(member(doc, "utilities", ""), out.players, out.goods, "utilities",
                              reader);
  return out;
}

std::vector<std::string> names_or_default(const std::vector<std::string>& names, std::size_t count,
                                          const char* prefix) {
  if (names.size() == count) return names;
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

json matrix_json(const std::vector<std::vector<Rational>>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rational_json(v));
    out.push_back(std::move(r));
  }
  return out;
}

json rationals_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(rational_json(v));
  return out;
}

std::vector<Rational> read_rationals(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  const RationalReader reader({}, nullptr);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(reader.read(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json bundles_json(const Allocation& allocation) {
  json out = json::array();
  for (const auto& bundle : allocation.bundles) out.push_back(bundle);
  return out;
}

Allocation read_bundles(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of bundles");
  Allocation out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.bundles.push_back(index_list(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json alpha_json(const Alpha& alpha) {
  return alpha.is_unbounded() ? json("unbounded") : rational_json(alpha.value());
}

Alpha read_alpha(const json& v, const std::string& path) {
  if (v.is_string() && v.get<std::string>() == "unbounded") return Alpha::unbounded();
  return Alpha::of(RationalReader({}, nullptr).read(v, path));
}

json report_json(const AuditReport& report) {
  json players = json::array();
  for (std::size_t i = 0; i < report.players.size(); ++i) {
    const PlayerAudit& pa = report.players[i];
    json axioms = json::object();
    for (Axiom axiom : kAllAxioms) {
      if (const AxiomVerdict* v = pa.find(axiom)) {
        axioms[std::string(axiom_name(axiom))] = {{"alpha", alpha_json(v->alpha)},
                                                  {"satisfied", v->satisfied}};
      }
    }
    players.push_back({{"name", player_label(report.player_names, i)},
                       {"utility", rational_json(pa.utility)},
                       {"axioms", std::move(axioms)}});
  }
  json out = {{"players", std::move(players)}};
  if (report.po) {
    json po = {{"satisfied", report.po->satisfied}};
    if (report.po->witness) po["witness"] = {{"choices", report.po->witness->choices}};
    if (report.po->witness_allocation) {
      po["witness"]["bundles"] = bundles_json(*report.po->witness_allocation);
    }
    out["po"] = std::move(po);
  }
  return out;
}

AuditReport read_report(const json& doc, const std::string& base) {
  if (!doc.is_object()) fail(base, "expected an object");
  AuditReport out;
  const std::string players_path = base.empty() ? "players" : base + ".players";
  const json& players = array_member(doc, "players", base);
  for (std::size_t i = 0; i < players.size(); ++i) {
    const std::string path = players_path + "[" + std::to_string(i) + "]";
    const json& p = players[i];
    if (!p.is_object()) fail(path, "expected an object");
    const json& name = member(p, "name", path);
    if (!name.is_string()) fail(path + ".name", "expected a string");
    out.player_names.push_back(name.get<std::string>());
    PlayerAudit pa;
    pa.utility = RationalReader({}, nullptr).read(member(p, "utility", path), path + ".utility");
    const json& axioms = member(p, "axioms", path);
    if (!axioms.is_object()) fail(path + ".axioms", "expected an object");
    for (Axiom axiom : kAllAxioms) {
      const std::string key(axiom_name(axiom));
      auto it = axioms.find(key);
      if (it == axioms.end()) {
        if (axiom == Axiom::kProp || axiom == Axiom::kProp1 || axiom == Axiom::kRrs ||
            axiom == Axiom::kPps) {
          fail(path + ".axioms", "missing axiom '" + key + "'");
        }
        continue;
      }
      const std::string apath = path + ".axioms." + key;
      AxiomVerdict verdict;
      verdict.satisfied = read_bool(member(*it, "satisfied", apath), apath + ".satisfied");
      verdict.alpha = read_alpha(member(*it, "alpha", apath), apath + ".alpha");
      switch (axiom) {
        case Axiom::kProp: pa.prop = verdict; break;
        case Axiom::kProp1: pa.prop1 = verdict; break;
        case Axiom::kRrs: pa.rrs = verdict; break;
        case Axiom::kPps: pa.pps = verdict; break;
        case Axiom::kMms: pa.mms = verdict; break;
        case Axiom::kEf: pa.ef = verdict; break;
        case Axiom::kEf1: pa.ef1 = verdict; break;
      }
    }
    out.players.push_back(std::move(pa));
  }
  if (auto it = doc.find("po"); it != doc.end()) {
    const std::string path = base.empty() ? "po" : base + ".po";
    ParetoVerdict po;
    po.satisfied = read_bool(member(*it, "satisfied", path), path + ".satisfied");
    if (auto w = it->find("witness"); w != it->end()) {
      po.witness = Outcome{index_list(member(*w, "choices", path + ".witness"),
                                      path + ".witness.choices")};
      if (auto b = w->find("bundles"); b != w->end()) {
        po.witness_allocation = read_bundles(*b, path + ".witness.bundles");
      }
    }
    out.po = std::move(po);
  }
  return out;
}

json round_json(const TransferRound& round) {
  json reductions = json::array();
  for (const auto& r : round.reductions) {
    reductions.push_back({{"from", r.from},
                          {"to", r.to},
                          {"good", r.good},
                          {"factor", rational_json(r.factor)},
                          {"zero_over_zero", r.zero_over_zero}});
  }
  json transfers = json::array();
  for (const auto& t : round.transfers) {
    transfers.push_back({{"from", t.from}, {"to", t.to}, {"good", t.good}});
  }
  return {{"above", round.above},
          {"at", round.at},
          {"below", round.below},
          {"dec_snapshots", round.dec_snapshots},
          {"reductions", std::move(reductions)},
          {"transfers", std::move(transfers)},
          {"deficit_before", round.deficit_before},
          {"deficit_after", round.deficit_after}};
}

std::string format_rate(std::size_t ok, std::size_t trials) {
  if (trials == 0) return "";
  // Round half up to four decimals with integer arithmetic.
  const std::uint64_t scaled = (static_cast<std::uint64_t>(ok) * 20000 + trials) / (2 * trials);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%04llu", static_cast<unsigned long long>(scaled / 10000),
                static_cast<unsigned long long>(scaled % 10000));
  return buf;
}

}  // namespace

std::string emit_rational(const Rational& value) { return rational_json(value).dump(); }

ParsedInstance parse_instance(std::string_view text, const ParseOptions& options) {
  ParsedInstance out;
  const json doc = options.lossless_decimal ? parse_json(quote_decimal_numbers(text))
                                            : parse_json(text);
  if (!doc.is_object()) fail("", "instance document must be a JSON object");
  const json& kind = member(doc, "kind", "");
  if (!kind.is_string()) fail("kind", "expected \"public\" or \"goods\"");
  const RationalReader reader(options, &out.warnings);
  const auto k = kind.get<std::string>();
  if (k == "public") {
    warn_unknown_keys(doc, {"kind", "players", "issues"}, "", out.warnings);
    DecisionInstance instance = read_public(doc, reader, out.warnings);
    require_valid(instance);
    out.instance = std::move(instance);
  } else if (k == "goods") {
    warn_unknown_keys(doc, {"kind", "players", "goods", "utilities"}, "", out.warnings);
    GoodsInstance goods = read_goods(doc, reader);
    require_valid(goods);
    out.instance = std::move(goods);
  } else {
    fail("kind", "expected \"public\" or \"goods\", got \"" + k + "\"");
  }
  return out;
}

std::string emit_instance(const DecisionInstance& instance) {
  json issues = json::array();
  for (std::size_t t = 0; t < instance.issues.size(); ++t) {
    const Issue& issue = instance.issues[t];
    issues.push_back(
        {{"name", issue.name.empty() ? "t" + std::to_string(t + 1) : issue.name},
         {"alternatives", names_or_default(issue.alternative_names, issue.alternative_count, "a")},
         {"utilities", matrix_json(issue.utilities)}});
  }
  const json doc = {{"kind", "public"},
                    {"players", names_or_default(instance.player_names, instance.players, "p")},
                    {"issues", std::move(issues)}};
  return dump(doc);
}

std::string emit_instance(const GoodsInstance& goods) {
  const json doc = {{"kind", "goods"},
                    {"players", names_or_default(goods.player_names, goods.players, "p")},
                    {"goods", names_or_default(goods.good_names, goods.goods, "g")},
                    {"utilities", matrix_json(goods.utilities)}};
  return dump(doc);
}

std::string emit_instance(const AnyInstance& instance) {
  return std::visit([](const auto& inst) { return emit_instance(inst); }, instance);
}

std::string trace_to_json(const MechanismTrace& trace) {
  json out;
  if (const auto* rr = std::get_if<RoundRobinTrace>(&trace)) {
    json picks = json::array();
    for (const auto& p : rr->picks) {
      picks.push_back({{"player", p.player}, {"issue", p.issue}, {"alternative", p.alternative}});
    }
    out = {{"type", "round-robin"}, {"order", rr->order}, {"picks", std::move(picks)}};
  } else if (const auto* lx = std::get_if<LeximinTrace>(&trace)) {
    json norm = json::array();
    for (const auto& v : lx->normalization) norm.push_back(v ? rational_json(*v) : json(nullptr));
    out = {{"type", "leximin"}, {"normalization", std::move(norm)},
           {"nodes_visited", lx->nodes_visited}};
  } else if (const auto* nw = std::get_if<NashTrace>(&trace)) {
    out = {{"type", "mnw"},
           {"support", nw->support},
           {"product", rational_json(nw->product)},
           {"nodes_visited", nw->nodes_visited}};
  } else {
    return "";
  }
  return out.dump(2);
}

std::string trace_to_json(const TransferTrace& trace) {
  json rounds = json::array();
  for (const auto& round : trace.rounds) rounds.push_back(round_json(round));
  const json out = {{"type", "transfers"},
                    {"p", trace.p},
                    {"exempt", trace.exempt},
                    {"rounds", std::move(rounds)},
                    {"zero_over_zero_used", trace.zero_over_zero_used}};
  return out.dump(2);
}

std::string emit_result(const ResultDocument& result) {
  json doc = {{"mechanism", result.mechanism}, {"utilities", rationals_json(result.utilities)}};
  if (result.outcome) {
    doc["kind"] = "public";
    doc["choices"] = result.outcome->choices;
  }
  if (result.allocation) {
    doc["kind"] = "goods";
    doc["bundles"] = bundles_json(*result.allocation);
  }
  if (result.weights) doc["weights"] = rationals_json(result.weights->values);
  if (result.certified_prop1) doc["certified_prop1"] = *result.certified_prop1;
  if (!result.trace_json.empty()) doc["trace"] = json::parse(result.trace_json);
  if (result.audit) doc["audit"] = report_json(*result.audit);
  return dump(doc);
}

ResultDocument parse_result(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail("", "result document must be a JSON object");
  ResultDocument out;
  const json& mechanism = member(doc, "mechanism", "");
  if (!mechanism.is_string()) fail("mechanism", "expected a string");
  out.mechanism = mechanism.get<std::string>();
  const json& kind = member(doc, "kind", "");
  if (kind == "public") {
    out.outcome = Outcome{index_list(member(doc, "choices", ""), "choices")};
  } else if (kind == "goods") {
    out.allocation = read_bundles(member(doc, "bundles", ""), "bundles");
  } else {
    fail("kind", "expected \"public\" or \"goods\"");
  }
  out.utilities = read_rationals(member(doc, "utilities", ""), "utilities");
  if (auto it = doc.find("weights"); it != doc.end()) {
    out.weights = WeightVector{read_rationals(*it, "weights")};
  }
  if (auto it = doc.find("certified_prop1"); it != doc.end()) {
    out.certified_prop1 = read_bool(*it, "certified_prop1");
  }
  if (auto it = doc.find("trace"); it != doc.end()) {
    if (!it->is_object()) fail("trace", "expected an object");
    out.trace_json = it->dump(2);
  }
  if (auto it = doc.find("audit"); it != doc.end()) out.audit = read_report(*it, "audit");
  return out;
}

std::string emit_report_json(const AuditReport& report) { return dump(report_json(report)); }

AuditReport parse_report(std::string_view text) { return read_report(parse_json(text), ""); }

std::string emit_report_text(const AuditReport& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.players.size(); ++i) {
    const PlayerAudit& pa = report.players[i];
    os << player_label(report.player_names, i) << " (utility " << pa.utility << ")\n";
    for (Axiom axiom : kAllAxioms) {
      const AxiomVerdict* v = pa.find(axiom);
      if (v == nullptr) continue;
      os << "  " << axiom_name(axiom) << ": " << (v->satisfied ? "ok" : "VIOLATED")
         << " (α = " << v->alpha.to_string() << ")\n";
    }
  }
  if (report.po) {
    os << "PO: " << (report.po->satisfied ? "ok" : "VIOLATED");
    if (report.po->witness_allocation) {
      os << " (dominated by bundles";
      for (const auto& bundle : report.po->witness_allocation->bundles) {
        os << " {";
        for (std::size_t k = 0; k < bundle.size(); ++k) os << (k ? "," : "") << bundle[k];
        os << "}";
      }
      os << ")";
    } else if (report.po->witness) {
      os << " (dominated by choices";
      for (std::size_t k = 0; k < report.po->witness->choices.size(); ++k) {
        os << (k ? "," : " ") << report.po->witness->choices[k];
      }
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string emit_report_csv(const AuditReport& report) {
  std::ostringstream os;
  os << "player,axiom,satisfied,alpha\n";
  for (std::size_t i = 0; i < report.players.size(); ++i) {
    for (Axiom axiom : kAllAxioms) {
      const AxiomVerdict* v = report.players[i].find(axiom);
      if (v == nullptr) continue;
      os << player_label(report.player_names, i) << ',' << axiom_name(axiom) << ','
         << (v->satisfied ? "true" : "false") << ',' << v->alpha.to_string() << '\n';
    }
  }
  if (report.po) os << "*,PO," << (report.po->satisfied ? "true" : "false") << ",\n";
  return os.str();
}

std::string emit_bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "mechanism,trials,PO_rate,PPS_rate,RRS_rate,Prop1_rate,min_alpha_PPS,min_alpha_RRS,"
        "min_alpha_Prop1\n";
  for (const auto& row : rows) {
    os << row.mechanism << ',' << row.trials << ',' << format_rate(row.po_ok, row.trials) << ','
       << format_rate(row.pps_ok, row.trials) << ',' << format_rate(row.rrs_ok, row.trials) << ','
       << format_rate(row.prop1_ok, row.trials) << ',' << row.min_pps.to_string() << ','
       << row.min_rrs.to_string() << ',' << row.min_prop1.to_string() << '\n';
  }
  return os.str();
}

std::string emit_bench_text(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << row.mechanism << " over " << row.trials << " trials\n"
       << "  PO    rate " << format_rate(row.po_ok, row.trials) << "\n"
       << "  PPS   rate " << format_rate(row.pps_ok, row.trials) << ", min α "
       << row.min_pps.to_string() << "\n"
       << "  RRS   rate " << format_rate(row.rrs_ok, row.trials) << ", min α "
       << row.min_rrs.to_string() << "\n"
       << "  Prop1 rate " << format_rate(row.prop1_ok, row.trials) << ", min α "
       << row.min_prop1.to_string() << "\n";
  }
  return os.str();
}

}  // namespace fairdec

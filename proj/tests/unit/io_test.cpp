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

#include <gtest/gtest.h>

#include "fairdec/audit.hpp"
#include "fairdec/errors.hpp"
#include "fairdec/generators.hpp"
#include "fairdec/mechanisms.hpp"
#include "fairdec/private_goods.hpp"
#include "fairdec/shares.hpp"
#include "fixtures.hpp"

namespace fairdec {
namespace {

using test::q;

constexpr const char* kExample1Doc = R"({
  "kind": "public",
  "players": ["ann", "bo"],
  "issues": [
    {"name": "t1", "alternatives": ["x", "y"], "utilities": [[1, 0], [0, 1]]},
    {"name": "t2", "alternatives": ["x", "y"], "utilities": [[1, 0], [0, 1]]}
  ]
})";

TEST(ParseInstanceTest, Example1Document) {
  const ParsedInstance parsed = parse_instance(kExample1Doc);
  EXPECT_TRUE(parsed.warnings.empty());
  const auto& inst = std::get<DecisionInstance>(parsed.instance);
  EXPECT_EQ(inst.player_names, (std::vector<std::string>{"ann", "bo"}));
  for (const auto& s : share_profile(inst).players) {
    EXPECT_EQ(s.prop, q(1));
    EXPECT_EQ(s.rrs, q(1));
    EXPECT_EQ(s.pps, q(1));
  }
}

TEST(ParseInstanceTest, RationalStringsAndCanonicalization) {
  const ParsedInstance parsed = parse_instance(
      R"({"kind":"goods","players":["a"],"goods":["g1","g2","g3"],"utilities":[["1/3","2/6","4"]]})");
  const auto& g = std::get<GoodsInstance>(parsed.instance);
  EXPECT_EQ(g.utilities[0][0], q(1, 3));
  EXPECT_EQ(g.utilities[0][1], q(1, 3));
  EXPECT_EQ(g.utilities[0][2], q(4));
  ASSERT_EQ(parsed.warnings.size(), 2u);
  EXPECT_NE(parsed.warnings[0].find("utilities[0][1]"), std::string::npos);
  EXPECT_NE(parsed.warnings[0].find("'2/6'"), std::string::npos);
}

TEST(ParseInstanceTest, Errors) {
  // Missing row.
  EXPECT_THROW(parse_instance(R"({"kind":"goods","players":["a","b"],"goods":["g"],"utilities":[[1]]})"),
               ValidationError);
  // Negative utility.
  EXPECT_THROW(parse_instance(R"({"kind":"goods","players":["a"],"goods":["g"],"utilities":[[-1]]})"),
               ValidationError);
  // Ragged issue row.
  EXPECT_THROW(parse_instance(R"({"kind":"public","players":["a","b"],"issues":[
                   {"name":"t","alternatives":["x","y"],"utilities":[[1,0],[1]]}]})"),
               ValidationError);
  EXPECT_THROW(parse_instance("{not json"), ValidationError);
  EXPECT_THROW(parse_instance("[]"), ValidationError);
  EXPECT_THROW(parse_instance(R"({"kind":"mixed"})"), ValidationError);
  EXPECT_THROW(parse_instance(R"({"kind":"goods","players":["a"],"goods":["g"],"utilities":[["1/0"]]})"),
               ValidationError);
  EXPECT_THROW(parse_instance(R"({"kind":"goods","players":["a"],"goods":["g"],"utilities":[[true]]})"),
               ValidationError);
}

TEST(ParseInstanceTest, ErrorMessagesLocateTheProblem) {
  try {
    parse_instance(R"({"kind":"goods","players":["a","b"],"goods":["g"],"utilities":[[1]]})");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("expected 2 rows"), std::string::npos) << e.what();
  }
}

TEST(ParseInstanceTest, FloatsNeedTheLosslessFlag) {
  const std::string doc =
      R"({"kind":"goods","players":["a"],"goods":["g1","g2","g3"],"utilities":[[0.25, 1e-1, "0.5"]]})";
  EXPECT_THROW(parse_instance(doc), ValidationError);
  const ParsedInstance parsed = parse_instance(doc, ParseOptions{true});
  const auto& g = std::get<GoodsInstance>(parsed.instance);
  EXPECT_EQ(g.utilities[0], (std::vector<Rational>{q(1, 4), q(1, 10), q(1, 2)}));
}

TEST(ParseInstanceTest, LosslessModeLeavesStringsAlone) {
  const ParsedInstance parsed = parse_instance(
      R"({"kind":"goods","players":["p 1.5e3"],"goods":["g-2.0"],"utilities":[[3]]})", ParseOptions{true});
  const auto& g = std::get<GoodsInstance>(parsed.instance);
  EXPECT_EQ(g.player_names[0], "p 1.5e3");
  EXPECT_EQ(g.good_names[0], "g-2.0");
}

TEST(ParseInstanceTest, UnknownKeysWarn) {
  const ParsedInstance parsed = parse_instance(
      R"({"kind":"goods","players":["a"],"goods":["g"],"utilities":[[1]],"comment":"hi"})");
  ASSERT_EQ(parsed.warnings.size(), 1u);
  EXPECT_NE(parsed.warnings[0].find("comment"), std::string::npos);
}

TEST(EmitInstanceTest, CanonicalRoundTrip) {
  for (const AnyInstance& inst :
       {AnyInstance(example2()), AnyInstance(compromise_instance()),
        AnyInstance(theorem6_upper_instance(q(1, 100))), AnyInstance(theorem5_instance(4).first)}) {
    const std::string text = emit_instance(inst);
    const ParsedInstance parsed = parse_instance(text);
    EXPECT_TRUE(parsed.warnings.empty());
    EXPECT_EQ(emit_instance(parsed.instance), text);
  }
}

TEST(EmitInstanceTest, RationalEncoding) {
  EXPECT_EQ(emit_rational(q(3)), "3");
  EXPECT_EQ(emit_rational(q(2, 6)), "\"1/3\"");
  EXPECT_EQ(emit_rational(Rational::parse("100000000000000000000")), "\"100000000000000000000\"");
}

TEST(EmitInstanceTest, FillsDefaultNames) {
  const std::string text = emit_instance(test::make_goods({test::row({1, 2})}));
  const ParsedInstance parsed = parse_instance(text);
  const auto& g = std::get<GoodsInstance>(parsed.instance);
  EXPECT_EQ(g.player_names, (std::vector<std::string>{"p1"}));
  EXPECT_EQ(g.good_names, (std::vector<std::string>{"g1", "g2"}));
}

TEST(ResultDocumentTest, PublicRoundTripWithTraceAndAudit) {
  const DecisionInstance inst = example2();
  const MechanismResult r = max_nash_welfare(inst);
  ResultDocument doc;
  doc.mechanism = r.mechanism;
  doc.outcome = r.outcome;
  doc.utilities = r.utilities;
  doc.trace_json = trace_to_json(r.trace);
  AuditOptions options;
  options.with_po = true;
  options.with_mms = true;
  doc.audit = audit(inst, r.outcome, options);
  doc.audit->player_names = {"p1", "p2"};
  const std::string text = emit_result(doc);
  const ResultDocument back = parse_result(text);
  EXPECT_EQ(back, doc);
  EXPECT_EQ(emit_result(back), text);
}

TEST(ResultDocumentTest, GoodsRoundTrip) {
  const GoodsInstance g = weighted_welfare_gap_instance().first;
  const PpsPoResult r = pps_po_allocate(test::make_goods({test::row({1, 1}), test::row({1, 1})}));
  ResultDocument doc;
  doc.mechanism = "pps-po";
  doc.allocation = r.allocation;
  doc.utilities = {q(1), q(1)};
  doc.weights = r.weights;
  doc.certified_prop1 = true;
  doc.trace_json = trace_to_json(r.trace);
  const std::string text = emit_result(doc);
  EXPECT_EQ(parse_result(text), doc);
  EXPECT_NE(text.find("\"transfers\""), std::string::npos);

  AuditOptions options;
  options.with_po = true;
  ResultDocument dominated;
  dominated.mechanism = "manual";
  dominated.allocation = Allocation{{{2, 3}, {0, 1}}};
  dominated.utilities = {q(2), q(6)};
  dominated.audit = audit_goods(g, *dominated.allocation, options);
  dominated.audit->player_names = {"p1", "p2"};
  EXPECT_EQ(parse_result(emit_result(dominated)), dominated);
}

TEST(ResultDocumentTest, Errors) {
  EXPECT_THROW(parse_result(R"({"kind":"public","mechanism":"x","choices":[-1],"utilities":[]})"),
               ValidationError);
  EXPECT_THROW(parse_result(R"({"kind":"public","choices":[0],"utilities":[]})"), ValidationError);
  EXPECT_THROW(parse_result(R"({"kind":"goods","mechanism":"x","choices":[0],"utilities":[]})"),
               ValidationError);
}

TEST(ReportTest, TextShowsViolationsWithAlpha) {
  const AuditReport r = audit(example2(), Outcome{std::vector<std::size_t>(8, 0)});
  const std::string text = emit_report_text(r);
  EXPECT_NE(text.find("p2 (utility 0)\n"), std::string::npos) << text;
  EXPECT_NE(text.find("  Prop1: VIOLATED (α = 1/2)\n"), std::string::npos) << text;
  EXPECT_NE(text.find("  PPS: ok (α = unbounded)\n"), std::string::npos) << text;
}

TEST(ReportTest, JsonRoundTripAndCsv) {
  AuditOptions options;
  options.with_po = true;
  AuditReport r = audit(compromise_instance(), Outcome{{0, 0}}, options);
  r.player_names = {"p1", "p2"};
  const std::string text = emit_report_json(r);
  EXPECT_EQ(parse_report(text), r);
  const std::string csv = emit_report_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "player,axiom,satisfied,alpha");
  EXPECT_NE(csv.find("*,PO,false,"), std::string::npos);
  EXPECT_NE(emit_report_text(r).find("PO: VIOLATED (dominated by choices 1,1)"), std::string::npos);
}

TEST(BenchTableTest, HeaderOnlyWhenEmpty) {
  EXPECT_EQ(emit_bench_csv({}),
            "mechanism,trials,PO_rate,PPS_rate,RRS_rate,Prop1_rate,min_alpha_PPS,min_alpha_RRS,"
            "min_alpha_Prop1\n");
}

TEST(BenchTableTest, RatesAndAlphas) {
  BenchRow row;
  row.mechanism = "mnw";
  row.trials = 3;
  row.po_ok = 3;
  row.pps_ok = 2;
  row.rrs_ok = 1;
  row.prop1_ok = 0;
  row.min_rrs = Alpha::of(q(1, 3));
  const std::string csv = emit_bench_csv({row});
  EXPECT_NE(csv.find("\nmnw,3,1.0000,0.6667,0.3333,0.0000,unbounded,1/3,unbounded\n"), std::string::npos)
      << csv;
}

}  // namespace
}  // namespace fairdec

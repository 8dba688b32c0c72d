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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "fairdec/audit.hpp"
#include "fairdec/errors.hpp"
#include "fairdec/generators.hpp"
#include "fairdec/mechanisms.hpp"
#include "fairdec/oracles.hpp"
#include "fairdec/private_goods.hpp"

namespace fairdec::cli {
namespace {

// Raised for unreadable or unwritable files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
}

ParsedInstance load_instance(const std::string& path, bool lossless, std::ostream& err) {
  ParseOptions options;
  options.lossless_decimal = lossless;
  ParsedInstance parsed = parse_instance(read_file(path), options);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  return parsed;
}

std::vector<std::size_t> parse_order(const std::string& text, std::size_t players) {
  if (text.empty()) {
    std::vector<std::size_t> order(players);
    for (std::size_t i = 0; i < players; ++i) order[i] = i;
    return order;
  }
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      order.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("--order: '" + item + "' is not a player index");
    }
  }
  return order;
}

std::string utilities_line(const std::vector<Rational>& utilities) {
  std::ostringstream os;
  for (std::size_t i = 0; i < utilities.size(); ++i) os << (i ? " " : "") << utilities[i];
  return os.str();
}

std::string result_text(const ResultDocument& doc, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "mechanism: " << doc.mechanism << "\n";
  if (doc.outcome) {
    os << "choices:";
    for (std::size_t c : doc.outcome->choices) os << " " << c;
    os << "\n";
  }
  if (doc.allocation) {
    for (std::size_t i = 0; i < doc.allocation->bundles.size(); ++i) {
      os << player_label(names, i) << " gets {";
      const auto& b = doc.allocation->bundles[i];
      for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
      os << "}\n";
    }
  }
  for (std::size_t i = 0; i < doc.utilities.size(); ++i) {
    os << "utility " << player_label(names, i) << ": " << doc.utilities[i] << "\n";
  }
  if (doc.weights) os << "weights: " << utilities_line(doc.weights->values) << "\n";
  if (doc.certified_prop1) os << "certified Prop1: " << (*doc.certified_prop1 ? "yes" : "no") << "\n";
  if (doc.audit) os << emit_report_text(*doc.audit);
  return os.str();
}

const std::vector<std::string>& names_of(const AnyInstance& instance) {
  return std::visit([](const auto& inst) -> const std::vector<std::string>& { return inst.player_names; },
                    instance);
}

ResultDocument from_mechanism(const MechanismResult& result, const GoodsInstance* goods) {
  ResultDocument doc;
  doc.mechanism = result.mechanism;
  if (goods != nullptr) {
    doc.allocation = outcome_to_allocation(*goods, result.outcome);
  } else {
    doc.outcome = result.outcome;
  }
  doc.utilities = result.utilities;
  doc.trace_json = trace_to_json(result.trace);
  return doc;
}

AuditReport audit_any(const AnyInstance& instance, const ResultDocument& doc,
                      const AuditOptions& options) {
  if (const auto* goods = std::get_if<GoodsInstance>(&instance)) {
    if (!doc.allocation) throw ValidationError("result holds choices but the instance is a goods instance");
    return audit_goods(*goods, *doc.allocation, options);
  }
  const auto& pub = std::get<DecisionInstance>(instance);
  if (!doc.outcome) throw ValidationError("result holds bundles but the instance is a public instance");
  return audit(pub, *doc.outcome, options);
}

struct SolveArgs {
  std::string mechanism;
  std::string input;
  std::string order;
  std::uint64_t cap = kDefaultOutcomeCap;
  std::size_t max_iterations = 1000;
  std::string out;
  std::string format = "json";
  bool with_audit = false;
  bool lossless = false;
};

int do_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const ParsedInstance parsed = load_instance(a.input, a.lossless, err);
  const auto* goods = std::get_if<GoodsInstance>(&parsed.instance);
  ResultDocument doc;
  if (a.mechanism == "pps-po" || a.mechanism == "prop1-po") {
    if (goods == nullptr) throw ValidationError("mechanism '" + a.mechanism + "' needs a goods instance");
    doc.mechanism = a.mechanism;
    if (a.mechanism == "pps-po") {
      PpsPoResult r = pps_po_allocate(*goods);
      doc.allocation = std::move(r.allocation);
      doc.weights = std::move(r.weights);
      doc.trace_json = trace_to_json(r.trace);
    } else {
      Prop1PoResult r = prop1_po_search(*goods, a.max_iterations);
      doc.allocation = std::move(r.allocation);
      doc.weights = std::move(r.weights);
      doc.certified_prop1 = r.certified_prop1;
      doc.trace_json = trace_to_json(r.trace);
    }
    doc.utilities = allocation_utilities(*goods, *doc.allocation);
  } else {
    const DecisionInstance pub =
        goods != nullptr ? goods_to_public(*goods) : std::get<DecisionInstance>(parsed.instance);
    MechanismResult result;
    if (a.mechanism == "round-robin") {
      result = round_robin(pub, parse_order(a.order, pub.players));
    } else if (a.mechanism == "leximin") {
      result = leximin(pub, a.cap);
    } else if (a.mechanism == "mnw") {
      result = max_nash_welfare(pub, a.cap);
    } else {
      throw ValidationError("unknown mechanism '" + a.mechanism + "'");
    }
    doc = from_mechanism(result, goods);
  }
  if (a.with_audit) doc.audit = audit_any(parsed.instance, doc, {});
  write_output(a.out, a.format == "text" ? result_text(doc, names_of(parsed.instance)) : emit_result(doc),
               out);
  return kOk;
}

struct AuditArgs {
  std::string input;
  std::string result;
  std::uint64_t po_cap = kDefaultOutcomeCap;
  bool skip_po = false;
  bool with_mms = false;
  std::uint64_t mms_cap = kDefaultMmsCap;
  std::string format = "text";
  std::string out;
  bool lossless = false;
};

int do_audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
  const ParsedInstance parsed = load_instance(a.input, a.lossless, err);
  const ResultDocument doc = parse_result(read_file(a.result));
  AuditOptions options;
  options.with_po = !a.skip_po;
  options.po_cap = a.po_cap;
  options.with_mms = a.with_mms;
  options.mms_cap = a.mms_cap;
  AuditReport report = audit_any(parsed.instance, doc, options);
  if (report.player_names.empty()) report.player_names = names_of(parsed.instance);
  const std::string text = a.format == "json"  ? emit_report_json(report)
                           : a.format == "csv" ? emit_report_csv(report)
                                               : emit_report_text(report);
  write_output(a.out, text, out);
  return kOk;
}

struct GenArgs {
  std::string family;
  FamilyParams params;
  std::string delta = "1/100";
  std::string out;
  std::string witness_out;
};

int do_gen(GenArgs a, std::ostream& out, std::ostream& err) {
  try {
    a.params.delta = Rational::parse(a.delta);
  } catch (const std::exception&) {
    throw ValidationError("--delta: '" + a.delta + "' is not a rational");
  }
  const Generated g = generate(parse_family(a.family), a.params);
  if (g.theorem5) {
    err << "x = " << g.theorem5->x << "\nd = " << g.theorem5->d << "\n";
  }
  if (g.critical_ratio) err << "critical weight ratio w1/w2 = " << *g.critical_ratio << "\n";
  if (g.appendix_k) err << "schedule parameter k = " << *g.appendix_k << "\n";
  if (!a.witness_out.empty()) {
    if (!g.witness) throw ValidationError("family '" + a.family + "' has no witness allocation");
    const auto& goods = std::get<GoodsInstance>(g.instance);
    ResultDocument doc;
    doc.mechanism = "witness";
    doc.allocation = *g.witness;
    doc.utilities = allocation_utilities(goods, *g.witness);
    write_output(a.witness_out, emit_result(doc), out);
  }
  write_output(a.out, emit_instance(g.instance), out);
  return kOk;
}

struct OracleArgs {
  std::string objective;
  std::string input;
  std::uint64_t cap = kDefaultOutcomeCap;
  std::string out;
  std::string format = "json";
  bool lossless = false;
};

int do_oracle(const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const ParsedInstance parsed = load_instance(a.input, a.lossless, err);
  const auto* goods = std::get_if<GoodsInstance>(&parsed.instance);
  const DecisionInstance pub =
      goods != nullptr ? goods_to_public(*goods) : std::get<DecisionInstance>(parsed.instance);
  const ResultDocument doc = from_mechanism(exact_optimum(pub, parse_objective(a.objective), a.cap), goods);
  write_output(a.out, a.format == "text" ? result_text(doc, names_of(parsed.instance)) : emit_result(doc),
               out);
  return kOk;
}

struct ReduceArgs {
  std::string input;
  std::string out;
  bool lossless = false;
};

int do_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
  const ParsedInstance parsed = load_instance(a.input, a.lossless, err);
  const auto* goods = std::get_if<GoodsInstance>(&parsed.instance);
  if (goods == nullptr) throw ValidationError("reduce expects a goods instance");
  write_output(a.out, emit_instance(goods_to_public(*goods)), out);
  return kOk;
}

struct BenchArgs {
  BenchConfig config;
  std::string format = "csv";
  std::string out;
};

int do_bench(BenchArgs a, std::ostream& out) {
  a.config.threads = worker_count();
  const auto rows = run_bench(a.config);
  write_output(a.out, a.format == "text" ? emit_bench_text(rows) : emit_bench_csv(rows), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair public decision making: mechanisms, audits, oracles and generators.", "fairdec"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a mechanism on an instance");
  solve_cmd->add_option("--mechanism", solve.mechanism, "Mechanism to run")
      ->required()
      ->check(CLI::IsMember({"round-robin", "leximin", "mnw", "pps-po", "prop1-po"}));
  solve_cmd->add_option("--input", solve.input, "Instance JSON")->required();
  solve_cmd->add_option("--order", solve.order, "Round robin order, e.g. 1,0,2 (default 0..n-1)");
  solve_cmd->add_option("--cap", solve.cap, "Largest outcome space to search");
  solve_cmd->add_option("--max-iterations", solve.max_iterations, "Round limit for prop1-po");
  solve_cmd->add_option("--out", solve.out, "Output file (default stdout)");
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember({"json", "text"}));
  solve_cmd->add_flag("--audit", solve.with_audit, "Embed an audit of the result");
  solve_cmd->add_flag("--lossless-decimal", solve.lossless, "Accept decimals as exact rationals");

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand("audit", "Audit a result against the fairness axioms");
  audit_cmd->add_option("--input", audit_args.input, "Instance JSON")->required();
  audit_cmd->add_option("--result", audit_args.result, "Result JSON from solve or oracle")->required();
  audit_cmd->add_option("--po-cap", audit_args.po_cap, "Largest outcome space for the Pareto check");
  audit_cmd->add_flag("--skip-po", audit_args.skip_po, "Do not run the Pareto check");
  audit_cmd->add_flag("--with-mms", audit_args.with_mms, "Also audit the maximin share");
  audit_cmd->add_option("--mms-cap", audit_args.mms_cap, "Largest partition count for MMS");
  audit_cmd->add_option("--format", audit_args.format)->check(CLI::IsMember({"json", "text", "csv"}));
  audit_cmd->add_option("--out", audit_args.out, "Output file (default stdout)");
  audit_cmd->add_flag("--lossless-decimal", audit_args.lossless, "Accept decimals as exact rationals");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named instance family");
  gen_cmd->add_option("--family", gen.family, "Family name")->required();
  gen_cmd->add_option("--n", gen.params.n, "Players");
  gen_cmd->add_option("--m", gen.params.m, "Issues or goods");
  gen_cmd->add_option("--k", gen.params.k, "Largest alternative count (random)");
  gen_cmd->add_option("--delta", gen.delta, "Rational delta (theorem6_upper)");
  gen_cmd->add_option("--seed", gen.params.seed, "Random seed");
  gen_cmd->add_option("--umin", gen.params.umin, "Smallest random utility");
  gen_cmd->add_option("--umax", gen.params.umax, "Largest random utility");
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--witness-out", gen.witness_out, "Write the family's witness allocation here");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by exhaustive enumeration");
  oracle_cmd->add_option("--objective", oracle.objective)
      ->required()
      ->check(CLI::IsMember({"nash", "leximin", "utilitarian"}));
  oracle_cmd->add_option("--input", oracle.input, "Instance JSON")->required();
  oracle_cmd->add_option("--cap", oracle.cap, "Largest outcome space to enumerate");
  oracle_cmd->add_option("--out", oracle.out, "Output file (default stdout)");
  oracle_cmd->add_option("--format", oracle.format)->check(CLI::IsMember({"json", "text"}));
  oracle_cmd->add_flag("--lossless-decimal", oracle.lossless, "Accept decimals as exact rationals");

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Rewrite a goods instance as a public instance");
  reduce_cmd->add_option("--input", reduce.input, "Goods instance JSON")->required();
  reduce_cmd->add_option("--out", reduce.out, "Output file (default stdout)");
  reduce_cmd->add_flag("--lossless-decimal", reduce.lossless, "Accept decimals as exact rationals");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Audit all mechanisms on random instances");
  bench_cmd->add_option("--trials", bench.config.trials, "Number of random instances");
  bench_cmd->add_option("--seed", bench.config.seed, "Random seed");
  bench_cmd->add_option("--n", bench.config.n, "Players");
  bench_cmd->add_option("--m", bench.config.m, "Issues");
  bench_cmd->add_option("--k", bench.config.k, "Largest alternative count");
  bench_cmd->add_option("--umax", bench.config.umax, "Largest utility (smallest is 0)");
  bench_cmd->add_option("--cap", bench.config.cap, "Largest outcome space to search");
  bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "text"}));
  bench_cmd->add_option("--out", bench.out, "Output file (default stdout)");

  std::vector<std::string> rest(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }

  try {
    if (*solve_cmd) return do_solve(solve, out, err);
    if (*audit_cmd) return do_audit(audit_args, out, err);
    if (*gen_cmd) return do_gen(gen, out, err);
    if (*oracle_cmd) return do_oracle(oracle, out, err);
    if (*reduce_cmd) return do_reduce(reduce, out, err);
    if (*bench_cmd) return do_bench(bench, out);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const DegenerateInstance& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}

}  // namespace fairdec::cli

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

#include <algorithm>
#include <array>
#include <cstdlib>
#include <exception>
#include <random>
#include <string>
#include <thread>

#include "cli.hpp"
#include "fairdec/audit.hpp"
#include "fairdec/generators.hpp"
#include "fairdec/mechanisms.hpp"

namespace fairdec::cli {
namespace {

constexpr std::array<const char*, 3> kBenchMechanisms = {"round-robin", "leximin", "mnw"};

struct TrialAudit {
  bool po = false;
  bool pps = false;
  bool rrs = false;
  bool prop1 = false;
  Alpha min_pps = Alpha::unbounded();
  Alpha min_rrs = Alpha::unbounded();
  Alpha min_prop1 = Alpha::unbounded();
};

using TrialRow = std::array<TrialAudit, kBenchMechanisms.size()>;

TrialRow run_trial(const BenchConfig& config, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                    static_cast<std::uint32_t>(config.seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(static_cast<std::uint64_t>(trial) >> 32)};
  std::mt19937_64 rng(seq);
  const DecisionInstance instance =
      random_public_instance(config.n, config.m, config.k, 0, config.umax, rng);

  AuditOptions options;
  options.with_po = true;
  options.po_cap = config.cap;

  TrialRow row;
  for (std::size_t k = 0; k < kBenchMechanisms.size(); ++k) {
    const std::string name = kBenchMechanisms[k];
    const MechanismResult result = name == "round-robin" ? round_robin(instance)
                                   : name == "leximin"   ? leximin(instance, config.cap)
                                                         : max_nash_welfare(instance, config.cap);
    const AuditReport report = audit(instance, result.outcome, options);
    row[k] = TrialAudit{report.po && report.po->satisfied,
                        report.all_satisfy(Axiom::kPps),
                        report.all_satisfy(Axiom::kRrs),
                        report.all_satisfy(Axiom::kProp1),
                        report.min_alpha(Axiom::kPps),
                        report.min_alpha(Axiom::kRrs),
                        report.min_alpha(Axiom::kProp1)};
  }
  return row;
}

}  // namespace

unsigned worker_count() {
  if (const char* env = std::getenv("FAIRDEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<TrialRow> trials(config.trials);
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::size_t>(config.threads, 1, std::max<std::size_t>(1, config.trials)));

  // Workers fill disjoint slots; the first exception (lowest trial) wins.
  std::vector<std::exception_ptr> errors(config.trials);
  auto work = [&](unsigned w) {
    for (std::size_t t = w; t < config.trials; t += workers) {
      try {
        trials[t] = run_trial(config, t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<BenchRow> rows;
  for (std::size_t k = 0; k < kBenchMechanisms.size(); ++k) {
    BenchRow row;
    row.mechanism = kBenchMechanisms[k];
    row.trials = config.trials;
    for (const TrialRow& trial : trials) {
      const TrialAudit& a = trial[k];
      row.po_ok += a.po;
      row.pps_ok += a.pps;
      row.rrs_ok += a.rrs;
      row.prop1_ok += a.prop1;
      row.min_pps = std::min(row.min_pps, a.min_pps);
      row.min_rrs = std::min(row.min_rrs, a.min_rrs);
      row.min_prop1 = std::min(row.min_prop1, a.min_prop1);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fairdec::cli

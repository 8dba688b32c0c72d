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

#include "fairdec/generators.hpp"

#include <cmath>
#include <limits>

#include "fairdec/audit.hpp"
#include "fairdec/errors.hpp"
#include "fairdec/oracles.hpp"

namespace fairdec {
namespace {

Rational r(std::int64_t v) { return Rational(v); }

Issue two_way_issue(std::string name, std::vector<std::vector<Rational>> utilities) {
  Issue issue;
  issue.alternative_count = utilities.front().size();
  issue.utilities = std::move(utilities);
  issue.name = std::move(name);
  return issue;
}

std::vector<std::string> numbered(const char* prefix, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

GoodsInstance goods_from_rows(std::vector<std::vector<Rational>> rows) {
  GoodsInstance out;
  out.players = rows.size();
  out.goods = rows.front().size();
  out.utilities = std::move(rows);
  out.player_names = numbered("p", out.players);
  out.good_names = numbered("g", out.goods);
  return out;
}

std::size_t checked_size(std::size_t value, std::size_t lo, std::size_t hi, const char* what) {
  if (value < lo || value > hi) {
    throw ValidationError(std::string(what) + " must lie in [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "], got " + std::to_string(value));
  }
  return value;
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kExample1: return "example1";
    case Family::kExample2: return "example2";
    case Family::kCompromise: return "compromise";
    case Family::kTheorem5: return "theorem5";
    case Family::kLemma6Upper: return "lemma6_upper";
    case Family::kTheorem6Upper: return "theorem6_upper";
    case Family::kAppendixA: return "appendixA";
    case Family::kWeightedWelfareGap: return "weighted_welfare_gap";
    case Family::kRandom: return "random";
    case Family::kRandomGoods: return "random_goods";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::kExample1, Family::kExample2, Family::kCompromise, Family::kTheorem5,
                   Family::kLemma6Upper, Family::kTheorem6Upper, Family::kAppendixA,
                   Family::kWeightedWelfareGap, Family::kRandom, Family::kRandomGoods}) {
    if (family_name(f) == name) return f;
  }
  throw ValidationError("unknown instance family '" + std::string(name) + "'");
}

DecisionInstance example1() {
  DecisionInstance out;
  out.players = 2;
  out.player_names = {"p1", "p2"};
  for (int t = 1; t <= 2; ++t) {
    out.issues.push_back(two_way_issue("t" + std::to_string(t), {{r(1), r(0)}, {r(0), r(1)}}));
    out.issues.back().alternative_names = {"a1", "a2"};
  }
  return out;
}

DecisionInstance example2() {
  DecisionInstance out;
  out.players = 2;
  out.player_names = {"p1", "p2"};
  for (int t = 1; t <= 8; ++t) {
    const Rational second = t <= 4 ? r(1) : r(0);
    out.issues.push_back(two_way_issue("t" + std::to_string(t), {{r(1), r(0)}, {r(0), second}}));
    out.issues.back().alternative_names = {"a1", "a2"};
  }
  return out;
}

DecisionInstance compromise_instance() {
  DecisionInstance out;
  out.players = 2;
  out.player_names = {"p1", "p2"};
  const Rational c(2, 3);
  out.issues.push_back(two_way_issue("t1", {{r(1), c}, {r(0), c}}));
  out.issues.push_back(two_way_issue("t2", {{r(0), c}, {r(1), c}}));
  for (auto& issue : out.issues) issue.alternative_names = {"extreme", "compromise"};
  return out;
}

std::pair<DecisionInstance, Theorem5Constants> theorem5_instance(std::size_t n) {
  checked_size(n, 2, 20, "theorem5 n");
  const double nd = static_cast<double>(n);
  const double x_real = (std::log(nd) - std::log(std::log(nd))) / nd;
  // Rational approximation within 1e-6 of the real constant.
  const std::int64_t scale = 10'000'000;
  const Rational x(static_cast<std::int64_t>(std::llround(x_real * static_cast<double>(scale))),
                   scale);
  const Rational n_r(static_cast<std::int64_t>(n));

  Theorem5Constants k;
  k.x = x;
  k.rhs_all_first = Rational(1) / (pow(Rational(1) + x, static_cast<unsigned>(n - 1)) -
                                   Rational(1) + Rational(1) / n_r);
  k.rhs_one_switch = n_r * x / (n_r + x);
  const Rational threshold = std::max(k.rhs_all_first, k.rhs_one_switch);

  const Rational grid(1'000'000);
  for (const Rational slack : {Rational(101, 100), Rational(21, 20), Rational(11, 10),
                               Rational(5, 4), Rational(3, 2), Rational(2)}) {
    // n*d rounded up to six decimals; strictly above both thresholds.
    const Rational n_times_d = ceil(threshold * slack * grid) / grid;
    const Rational d = n_times_d / n_r;
    if (d >= Rational(1)) break;

    DecisionInstance inst;
    inst.players = n;
    inst.player_names = numbered("p", n);
    for (std::size_t t = 0; t < n; ++t) {
      std::vector<std::vector<Rational>> u(n, std::vector<Rational>{r(0), r(0)});
      u[0] = {r(1), d};
      if (t == 0) {
        for (std::size_t i = 1; i < n; ++i) u[i][1] = x;
      } else {
        u[t][1] = r(1);
      }
      inst.issues.push_back(two_way_issue("t" + std::to_string(t + 1), std::move(u)));
    }

    const MechanismResult optimum = exact_optimum(inst, Objective::kNash);
    const bool all_second = std::all_of(optimum.outcome.choices.begin(), optimum.outcome.choices.end(),
                                        [](std::size_t a) { return a == 1; });
    if (all_second) {
      k.d = d;
      return {std::move(inst), std::move(k)};
    }
  }
  throw Error("theorem5: no certified d found for n = " + std::to_string(n));
}

std::pair<GoodsInstance, Allocation> lemma6_upper_instance(std::size_t n) {
  checked_size(n, 2, 64, "lemma6_upper n");
  const std::size_t m = n * n;
  std::vector<std::vector<Rational>> u(n, std::vector<Rational>(m, r(0)));
  for (std::size_t g = 0; g < m; ++g) {
    u[0][g] = g < n ? r(1) : Rational(1, static_cast<std::int64_t>(n - 1));
  }

  Allocation a;
  a.bundles.resize(n);
  for (std::size_t g = n; g < 2 * n; ++g) a.bundles[0].push_back(g);
  a.bundles[1] = {0, 1};
  for (std::size_t i = 2; i < n; ++i) {
    a.bundles[i].push_back(i);
    for (std::size_t g = i * n; g < (i + 1) * n; ++g) a.bundles[i].push_back(g);
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t g : a.bundles[i]) u[i][g] = r(1);
  }
  return {goods_from_rows(std::move(u)), std::move(a)};
}

GoodsInstance theorem6_upper_instance(const Rational& delta) {
  if (delta.sign() <= 0 || delta >= Rational(1)) {
    throw ValidationError("theorem6_upper requires 0 < delta < 1");
  }
  const Rational half(1, 2);
  const Rational high = Rational(1) - delta;
  return goods_from_rows({{high, high, half, half}, {r(1), r(1), r(0), r(0)}});
}

AppendixAInstance appendix_a_instance(std::size_t n, std::size_t m) {
  checked_size(n, 2, 64, "appendixA n");
  if (m <= 4 * n - 2) {
    throw ValidationError("appendixA requires m > 4n - 2 (m = " + std::to_string(m) +
                          ", 4n - 2 = " + std::to_string(4 * n - 2) + ")");
  }
  std::vector<std::size_t> schedule{m / n};
  for (std::size_t k = 2; k <= m / n + 1; ++k) {
    if (k != m / n) schedule.push_back(k);
  }

  for (std::size_t k : schedule) {
    std::vector<std::vector<Rational>> u(n, std::vector<Rational>(m, r(0)));
    for (std::size_t g = 0; g < m; ++g) {
      const std::size_t rank = g + 1;  // goods are listed in player 1's descending order
      if (rank == 1) {
        u[0][g] = r(static_cast<std::int64_t>((k - 1) * n + 1));
      } else if (rank <= k * n - 1) {
        u[0][g] = r(static_cast<std::int64_t>(n));
      } else {
        u[0][g] = r(1);
      }
    }
    Allocation a;
    a.bundles.resize(n);
    a.bundles[0] = {0};
    for (std::size_t g = 1; g < m; ++g) {
      const std::size_t owner = 1 + (g - 1) % (n - 1);
      a.bundles[owner].push_back(g);
      u[owner][g] = r(1);
    }
    GoodsInstance goods = goods_from_rows(std::move(u));

    const AuditReport report = audit_goods(goods, a);
    if (report.all_satisfy(Axiom::kRrs) && !report.players[0].prop1.satisfied) {
      return AppendixAInstance{std::move(goods), std::move(a), k};
    }
  }
  throw Error("appendixA: no schedule parameter produced a certified RRS-but-not-Prop1 witness");
}

std::pair<GoodsInstance, Rational> weighted_welfare_gap_instance() {
  return {goods_from_rows({{r(4), r(4), r(1), r(1)}, {r(3), r(3), r(2), r(2)}}), Rational(3, 4)};
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ValidationError("empty range");
  // Reject the low 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t v = rng();
    if (v >= threshold) return v % bound;
  }
}

std::int64_t uniform_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw ValidationError("empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  return lo + static_cast<std::int64_t>(uniform_below(rng, span));
}

DecisionInstance random_public_instance(std::size_t n, std::size_t m, std::size_t k_max,
                                        std::int64_t umin, std::int64_t umax,
                                        std::mt19937_64& rng) {
  checked_size(n, 1, 1'000'000, "n");
  checked_size(m, 1, 1'000'000, "m");
  checked_size(k_max, 1, 1'000'000, "k");
  if (umin < 0 || umax < umin) throw ValidationError("utility range must satisfy 0 <= umin <= umax");
  DecisionInstance out;
  out.players = n;
  for (std::size_t t = 0; t < m; ++t) {
    Issue issue;
    issue.alternative_count = 1 + uniform_below(rng, k_max);
    issue.utilities.assign(n, std::vector<Rational>(issue.alternative_count));
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& v : issue.utilities[i]) v = Rational(uniform_between(rng, umin, umax));
    }
    out.issues.push_back(std::move(issue));
  }
  return out;
}

GoodsInstance random_goods_instance(std::size_t n, std::size_t m, std::int64_t umin,
                                    std::int64_t umax, std::mt19937_64& rng) {
  checked_size(n, 1, 1'000'000, "n");
  checked_size(m, 1, 1'000'000, "m");
  if (umin < 0 || umax < umin) throw ValidationError("utility range must satisfy 0 <= umin <= umax");
  GoodsInstance out;
  out.players = n;
  out.goods = m;
  out.utilities.assign(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : out.utilities[i]) v = Rational(uniform_between(rng, umin, umax));
  }
  return out;
}

Generated generate(Family family, const FamilyParams& params) {
  Generated out;
  switch (family) {
    case Family::kExample1:
      out.instance = example1();
      break;
    case Family::kExample2:
      out.instance = example2();
      break;
    case Family::kCompromise:
      out.instance = compromise_instance();
      break;
    case Family::kTheorem5: {
      auto [inst, constants] = theorem5_instance(params.n);
      out.instance = std::move(inst);
      out.theorem5 = std::move(constants);
      break;
    }
    case Family::kLemma6Upper: {
      auto [goods, witness] = lemma6_upper_instance(params.n);
      out.instance = std::move(goods);
      out.witness = std::move(witness);
      break;
    }
    case Family::kTheorem6Upper:
      out.instance = theorem6_upper_instance(params.delta);
      break;
    case Family::kAppendixA: {
      AppendixAInstance a = appendix_a_instance(params.n, params.m);
      out.instance = std::move(a.goods);
      out.witness = std::move(a.witness);
      out.appendix_k = a.k;
      break;
    }
    case Family::kWeightedWelfareGap: {
      auto [goods, ratio] = weighted_welfare_gap_instance();
      out.instance = std::move(goods);
      out.critical_ratio = std::move(ratio);
      break;
    }
    case Family::kRandom: {
      std::mt19937_64 rng(params.seed);
      out.instance = random_public_instance(params.n, params.m, params.k, params.umin, params.umax, rng);
      break;
    }
    case Family::kRandomGoods: {
      std::mt19937_64 rng(params.seed);
      out.instance = random_goods_instance(params.n, params.m, params.umin, params.umax, rng);
      break;
    }
  }
  return out;
}

}  // namespace fairdec

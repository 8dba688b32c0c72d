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

#include <random>

#include <gtest/gtest.h>

#include "fairdec/errors.hpp"
#include "fairdec/generators.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

namespace fairdec {
namespace {

using test::q;
using test::row;
using Choices = std::vector<std::size_t>;

TEST(ExactOptimumTest, NashExample1) {
  const MechanismResult r = exact_optimum(example1(), Objective::kNash);
  EXPECT_EQ(r.utilities, (std::vector<Rational>{q(1), q(1)}));
  EXPECT_EQ(std::get<NashTrace>(r.trace).product, q(1));
  EXPECT_EQ(r.outcome.choices, (Choices{0, 1}));
}

TEST(ExactOptimumTest, LeximinExample2) {
  const MechanismResult r = exact_optimum(example2(), Objective::kLeximin);
  EXPECT_EQ(r.utilities, (std::vector<Rational>{q(5), q(3)}));
  EXPECT_EQ(r.outcome.choices, (Choices{0, 1, 1, 1, 0, 0, 0, 0}));
}

TEST(ExactOptimumTest, UtilitarianExample2) {
  const MechanismResult r = exact_optimum(example2(), Objective::kUtilitarian);
  EXPECT_EQ(r.mechanism, "utilitarian");
  EXPECT_EQ(r.outcome.choices, Choices(8, 0));
  EXPECT_EQ(r.utilities[0] + r.utilities[1], q(8));
}

TEST(ExactOptimumTest, CapAndNames) {
  EXPECT_THROW(exact_optimum(example2(), Objective::kNash, 255), CapExceeded);
  EXPECT_EQ(parse_objective("leximin"), Objective::kLeximin);
  EXPECT_EQ(objective_name(Objective::kUtilitarian), "utilitarian");
  EXPECT_THROW(parse_objective("egalitarian"), ValidationError);
}

TEST(ExactOptimumTest, MatchesReference) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const DecisionInstance inst = test::small_public(rng, 3, 5, 3, 5);
    EXPECT_EQ(exact_optimum(inst, Objective::kNash).outcome.choices, ref::nash(inst).choices);
    EXPECT_EQ(exact_optimum(inst, Objective::kLeximin).outcome.choices, ref::leximin(inst).choices);
  }
}

TEST(ParetoFrontierTest, Example1) {
  const auto f = pareto_frontier(example1());
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].utilities, (std::vector<Rational>{q(2), q(0)}));
  EXPECT_EQ(f[0].outcome.choices, (Choices{0, 0}));
  EXPECT_EQ(f[1].utilities, (std::vector<Rational>{q(1), q(1)}));
  EXPECT_EQ(f[2].utilities, (std::vector<Rational>{q(0), q(2)}));
}

TEST(ParetoFrontierTest, CompromiseExcludesBothExtremes) {
  const auto f = pareto_frontier(compromise_instance());
  for (const auto& point : f) EXPECT_NE(point.outcome.choices, (Choices{0, 0}));
  bool has_compromise = false;
  for (const auto& point : f) has_compromise = has_compromise || point.utilities == std::vector<Rational>{q(4, 3), q(4, 3)};
  EXPECT_TRUE(has_compromise);
}

TEST(ParetoFrontierTest, SingleOutcome) {
  const DecisionInstance inst = test::make_public({{row({3}), row({1})}});
  const auto f = pareto_frontier(inst);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].outcome.choices, (Choices{0}));
}

TEST(ParetoFrontierTest, MembersAreExactlyTheUndominated) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const DecisionInstance inst = test::small_public(rng, 3, 4, 3, 3);
    const auto f = pareto_frontier(inst);
    for (const auto& point : f) EXPECT_TRUE(ref::pareto_optimal(inst, point.outcome.choices));
    std::size_t undominated_vectors = 0;
    std::vector<std::vector<Rational>> seen;
    ref::for_each_outcome(inst, [&](const Choices& c) {
      if (!ref::pareto_optimal(inst, c)) return;
      const auto u = ref::utilities(inst, c);
      if (std::find(seen.begin(), seen.end(), u) == seen.end()) {
        seen.push_back(u);
        ++undominated_vectors;
      }
    });
    EXPECT_EQ(f.size(), undominated_vectors);
  }
}

TEST(WeightedWelfareMaximizersTest, TieEnumeratesAllBreakings) {
  const GoodsInstance g = weighted_welfare_gap_instance().first;
  // At w1/w2 = 3/4 goods 1 and 2 tie; goods 3 and 4 go to player 2.
  const auto all = weighted_welfare_maximizers(g, WeightVector{{q(3), q(4)}});
  EXPECT_EQ(all.size(), 4u);
  const auto strict = weighted_welfare_maximizers(g, WeightVector{{q(1), q(1)}});
  ASSERT_EQ(strict.size(), 1u);
  EXPECT_EQ(strict[0].bundles[0], (Choices{0, 1}));
}

TEST(ProductBoundTest, Examples) {
  ProductBound b = feasible_product_lower_bound({q(7, 10), q(1), q(1)}, q(3, 10));
  EXPECT_TRUE(b.feasible);
  EXPECT_TRUE(b.product_ok);
  b = feasible_product_lower_bound({q(9, 10), q(9, 10)}, q(1, 5));
  EXPECT_TRUE(b.feasible);
  EXPECT_TRUE(b.product_ok);
  b = feasible_product_lower_bound({q(1, 2), q(1)}, q(1, 4));
  EXPECT_FALSE(b.feasible);
}

TEST(ProductBoundTest, DomainChecks) {
  EXPECT_THROW(feasible_product_lower_bound({q(1)}, q(0)), ValidationError);
  EXPECT_THROW(feasible_product_lower_bound({q(1)}, q(1)), ValidationError);
  EXPECT_THROW(feasible_product_lower_bound({q(-1)}, q(1, 2)), ValidationError);
}

TEST(ProductBoundTest, HoldsOnRandomFeasibleSets) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + uniform_below(rng, 8);
    const Rational delta(uniform_between(rng, 1, 99), 100);
    std::vector<Rational> xs;
    Rational budget = delta;
    for (std::size_t k = 0; k < n; ++k) {
      // Spend a random part of the remaining deficit budget, or go above 1.
      if (uniform_below(rng, 3) == 0) {
        xs.push_back(Rational(1) + Rational(uniform_between(rng, 0, 50), 10));
        continue;
      }
      const Rational spend = budget * Rational(uniform_between(rng, 0, 100), 100);
      budget -= spend;
      xs.push_back(Rational(1) - spend);
    }
    const ProductBound b = feasible_product_lower_bound(xs, delta);
    ASSERT_TRUE(b.feasible);
    EXPECT_TRUE(b.product_ok);
  }
}

}  // namespace
}  // namespace fairdec

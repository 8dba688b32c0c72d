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

#include "fairdec/private_goods.hpp"

#include <random>

#include <gtest/gtest.h>

#include "fairdec/audit.hpp"
#include "fairdec/errors.hpp"
#include "fairdec/generators.hpp"
#include "fairdec/shares.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

namespace fairdec {
namespace {

using test::q;
using test::row;
using Goods = std::vector<std::size_t>;

GoodsInstance gap_instance() { return weighted_welfare_gap_instance().first; }

TEST(WeightedWelfareTest, TiesGoToLowestPlayer) {
  const Allocation a = weighted_welfare_allocation(gap_instance(), WeightVector{{q(3), q(4)}});
  EXPECT_EQ(a.bundles[0], (Goods{0, 1}));
  EXPECT_EQ(a.bundles[1], (Goods{2, 3}));
}

TEST(WeightedWelfareTest, StrictArgmax) {
  const GoodsInstance g = test::make_goods({row({1, 0}), row({0, 1})});
  const Allocation a = weighted_welfare_allocation(g, WeightVector{{q(1), q(1)}});
  EXPECT_EQ(a.bundles[0], (Goods{0}));
  EXPECT_EQ(a.bundles[1], (Goods{1}));
}

TEST(WeightedWelfareTest, SinglePlayerTakesEverything) {
  const GoodsInstance g = test::make_goods({row({0, 2, 5})});
  EXPECT_EQ(weighted_welfare_allocation(g, WeightVector{{q(7)}}).bundles[0], (Goods{0, 1, 2}));
}

TEST(WeightedWelfareTest, RejectsBadWeights) {
  EXPECT_THROW(weighted_welfare_allocation(gap_instance(), WeightVector{{q(1), q(0)}}), ValidationError);
  EXPECT_THROW(weighted_welfare_allocation(gap_instance(), WeightVector{{q(1)}}), ValidationError);
}

TEST(WeightedWelfareTest, MaximizerCheck) {
  const GoodsInstance g = gap_instance();
  const WeightVector w{{q(3), q(4)}};
  EXPECT_TRUE(is_weighted_welfare_maximizer(g, w, Allocation{{{0, 1}, {2, 3}}}));
  EXPECT_TRUE(is_weighted_welfare_maximizer(g, w, Allocation{{{1}, {0, 2, 3}}}));
  EXPECT_FALSE(is_weighted_welfare_maximizer(g, w, Allocation{{{0, 1, 2}, {3}}}));
}

TEST(PpsPoTest, GoodsExampleNeedsNoRounds) {
  const PpsPoResult r = pps_po_allocate(gap_instance());
  EXPECT_EQ(r.allocation.bundles[0], (Goods{0, 1}));
  EXPECT_EQ(r.allocation.bundles[1], (Goods{2, 3}));
  EXPECT_TRUE(r.trace.rounds.empty());
  EXPECT_EQ(r.weights, WeightVector::uniform(2));
  EXPECT_EQ(r.trace.p, 2u);
}

TEST(PpsPoTest, IdenticalPlayersNeedOneTieTransfer) {
  const PpsPoResult r = pps_po_allocate(test::make_goods({row({1, 1}), row({1, 1})}));
  EXPECT_EQ(r.allocation.bundles[0], (Goods{1}));
  EXPECT_EQ(r.allocation.bundles[1], (Goods{0}));
  ASSERT_EQ(r.trace.rounds.size(), 1u);
  const TransferRound& round = r.trace.rounds[0];
  EXPECT_EQ(round.dec_snapshots.front(), (Goods{0}));
  ASSERT_EQ(round.reductions.size(), 1u);
  EXPECT_EQ(round.reductions[0].from, 0u);
  EXPECT_EQ(round.reductions[0].to, 1u);
  EXPECT_EQ(round.reductions[0].good, 0u);
  EXPECT_EQ(round.reductions[0].factor, q(1));
  ASSERT_EQ(round.transfers.size(), 1u);
  EXPECT_EQ(round.transfers[0], (GoodTransfer{0, 1, 0}));
  EXPECT_EQ(round.deficit_before, 1u);
  EXPECT_EQ(round.deficit_after, 0u);
}

TEST(PpsPoTest, SinglePlayer) {
  const PpsPoResult r = pps_po_allocate(test::make_goods({row({3, 0, 1})}));
  EXPECT_EQ(r.allocation.bundles[0], (Goods{0, 1, 2}));
  EXPECT_TRUE(r.trace.rounds.empty());
}

TEST(PpsPoTest, ZeroSharePlayersAreExempt) {
  // Player 2 only likes one good, so with p = 2 her pessimistic share is 0.
  const GoodsInstance g = test::make_goods({row({5, 5, 5, 5}), row({0, 0, 0, 9})});
  const PpsPoResult r = pps_po_allocate(g);
  EXPECT_EQ(r.trace.exempt, (Goods{1}));
  EXPECT_TRUE(audit_goods(g, r.allocation).all_satisfy(Axiom::kPps));
}

void check_pps_po(const GoodsInstance& g, const PpsPoResult& r, bool exhaustive_po) {
  require_valid_allocation(g, r.allocation);
  const std::size_t p = g.goods / g.players;
  const DecisionInstance pub = goods_to_public(g);
  for (std::size_t i = 0; i < g.players; ++i) {
    if (pps_share(pub, i).sign() > 0) {
      EXPECT_GE(r.allocation.bundles[i].size(), p);
    }
    EXPECT_GT(r.weights.values[i], q(0));
  }
  EXPECT_TRUE(is_weighted_welfare_maximizer(g, r.weights, r.allocation));
  AuditOptions options;
  options.with_po = exhaustive_po;
  const AuditReport report = audit_goods(g, r.allocation, options);
  EXPECT_TRUE(report.all_satisfy(Axiom::kPps));
  if (exhaustive_po) {
    EXPECT_TRUE(report.po->satisfied);
  }

  EXPECT_LE(r.trace.rounds.size(), g.goods);
  for (const auto& round : r.trace.rounds) {
    EXPECT_LT(round.deficit_after, round.deficit_before);
    EXPECT_LE(round.reductions.size(), g.players);
    EXPECT_LE(round.transfers.size(), g.players);
    EXPECT_EQ(round.dec_snapshots.size(), round.reductions.size() + 1);
    for (const auto& red : round.reductions) EXPECT_GE(red.factor, q(1));
  }
}

TEST(PpsPoTest, PropertiesOnRandomInstances) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const GoodsInstance g = test::small_goods(rng, 6, 20, 1, 10);
    check_pps_po(g, pps_po_allocate(g), false);
  }
}

TEST(PpsPoTest, PropertiesWithZerosAndExhaustivePareto) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const GoodsInstance g = test::small_goods(rng, 3, 7, 0, 4);
    check_pps_po(g, pps_po_allocate(g), true);
  }
}

TEST(PpsPoTest, Deterministic) {
  std::mt19937_64 rng(33);
  const GoodsInstance g = test::small_goods(rng, 5, 20, 1, 10);
  const PpsPoResult a = pps_po_allocate(g);
  const PpsPoResult b = pps_po_allocate(g);
  EXPECT_EQ(a.allocation, b.allocation);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_EQ(a.trace, b.trace);
}

TEST(Prop1PoTest, GoodsExampleIsImmediatelyCertified) {
  const Prop1PoResult r = prop1_po_search(gap_instance(), 50);
  EXPECT_TRUE(r.certified_prop1);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.allocation.bundles[0], (Goods{0, 1}));
}

TEST(Prop1PoTest, ProportionalStartNeedsNoIterations) {
  const GoodsInstance g = test::make_goods({row({3, 1, 0}), row({0, 1, 3})});
  const Prop1PoResult r = prop1_po_search(g, 10);
  EXPECT_TRUE(r.certified_prop1);
  EXPECT_EQ(r.iterations, 0u);
}

TEST(Prop1PoTest, RandomThreeByNineCertifiedWithinFiftyIterations) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const GoodsInstance g = random_goods_instance(3, 9, 1, 10, rng);
    const Prop1PoResult r = prop1_po_search(g, 50);
    EXPECT_TRUE(is_weighted_welfare_maximizer(g, r.weights, r.allocation));
    EXPECT_TRUE(r.certified_prop1) << "trial " << trial;
    EXPECT_EQ(r.certified_prop1, goods_prop1_holds(g, r.allocation));
    EXPECT_LE(r.iterations, 50u);
  }
}

TEST(Prop1PoTest, ZeroIterationBudgetStillReturnsWelfareMaximizer) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const GoodsInstance g = test::small_goods(rng, 4, 10, 0, 10);
    const Prop1PoResult r = prop1_po_search(g, 0);
    EXPECT_EQ(r.iterations, 0u);
    EXPECT_TRUE(is_weighted_welfare_maximizer(g, r.weights, r.allocation));
    EXPECT_EQ(r.certified_prop1, goods_prop1_holds(g, r.allocation));
  }
}

}  // namespace
}  // namespace fairdec

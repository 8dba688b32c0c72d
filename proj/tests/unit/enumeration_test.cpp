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

#include "fairdec/enumeration.hpp"

#include <set>

#include <gtest/gtest.h>

#include "fairdec/errors.hpp"
#include "fairdec/generators.hpp"
#include "fixtures.hpp"

namespace fairdec {
namespace {

TEST(EnumerationTest, Example1InLexOrder) {
  const auto all = enumerate_outcomes(example1(), kDefaultOutcomeCap);
  ASSERT_EQ(all.size(), 4u);
  EXPECT_EQ(all[0].choices, (std::vector<std::size_t>{0, 0}));
  EXPECT_EQ(all[1].choices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(all[2].choices, (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(all[3].choices, (std::vector<std::size_t>{1, 1}));
}

TEST(EnumerationTest, SingleIssueThreeAlternatives) {
  const DecisionInstance inst = test::make_public({{test::row({1, 2, 3})}});
  EXPECT_EQ(enumerate_outcomes(inst, 10).size(), 3u);
}

TEST(EnumerationTest, Example2HasAllDistinctOutcomes) {
  const auto all = enumerate_outcomes(example2(), kDefaultOutcomeCap);
  EXPECT_EQ(all.size(), 256u);
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    seen.insert(all[i].choices);
    if (i > 0) {
      EXPECT_LT(all[i - 1], all[i]);
    }
  }
  EXPECT_EQ(seen.size(), 256u);
}

TEST(EnumerationTest, MixedRadix) {
  const DecisionInstance inst =
      test::make_public({{test::row({0, 0, 0})}, {test::row({1})}, {test::row({0, 1})}});
  EXPECT_EQ(outcome_space_size(inst), "6");
  EXPECT_EQ(enumerate_outcomes(inst, 6).size(), 6u);
}

TEST(EnumerationTest, CapCarriesExactSize) {
  try {
    enumerate_outcomes(example2(), 255);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.search_space_size(), "256");
  }
  EXPECT_NO_THROW(enumerate_outcomes(example2(), 256));
}

TEST(EnumerationTest, HugeSpaceSizeDoesNotOverflow) {
  std::mt19937_64 rng(3);
  const DecisionInstance inst = random_public_instance(2, 70, 1, 0, 1, rng);
  DecisionInstance wide = inst;
  for (auto& issue : wide.issues) {
    issue.alternative_count = 2;
    for (auto& r : issue.utilities) r.assign(2, Rational(1));
  }
  EXPECT_EQ(outcome_space_size(wide), "1180591620717411303424");
  EXPECT_THROW(require_outcome_space_within(wide, kDefaultOutcomeCap, "test"), CapExceeded);
}

TEST(EnumerationTest, AllocationsCoverOwnerVectors) {
  const GoodsInstance g = test::make_goods({test::row({1, 1, 1}), test::row({1, 1, 1})});
  AllocationEnumerator it(g, 100);
  std::size_t count = 0;
  for (Allocation a; it.next(a);) {
    ++count;
    std::size_t total = 0;
    for (const auto& b : a.bundles) total += b.size();
    EXPECT_EQ(total, 3u);
    for (std::size_t good = 0; good < 3; ++good) {
      const auto& bundle = a.bundles[it.owners()[good]];
      EXPECT_NE(std::find(bundle.begin(), bundle.end(), good), bundle.end());
    }
  }
  EXPECT_EQ(count, 8u);
  EXPECT_THROW(AllocationEnumerator(g, 7), CapExceeded);
}

}  // namespace
}  // namespace fairdec

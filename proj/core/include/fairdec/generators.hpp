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

#ifndef FAIRDEC_GENERATORS_HPP_
#define FAIRDEC_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <variant>

#include "fairdec/model.hpp"
#include "fairdec/rational.hpp"

namespace fairdec {

enum class Family {
  kExample1,
  kExample2,
  kCompromise,
  kTheorem5,
  kLemma6Upper,
  kTheorem6Upper,
  kAppendixA,
  kWeightedWelfareGap,
  kRandom,
  kRandomGoods,
};

std::string_view family_name(Family family);
/// Throws ValidationError on an unknown name.
Family parse_family(std::string_view name);

struct FamilyParams {
  std::size_t n = 2;
  std::size_t m = 2;
  /// Largest alternative count per issue (random family).
  std::size_t k = 2;
  Rational delta{1, 100};
  std::uint64_t seed = 0;
  std::int64_t umin = 0;
  std::int64_t umax = 5;
};

/// Exact constants behind the MNW-versus-PPS construction.
struct Theorem5Constants {
  /// Rational approximation of (ln n - ln ln n) / n.
  Rational x;
  /// Utility of player 1 for the second alternative of every issue.
  Rational d;
  /// 1 / ((1+x)^(n-1) - 1 + 1/n).
  Rational rhs_all_first;
  /// n x / (n + x).
  Rational rhs_one_switch;
};

struct Generated {
  std::variant<DecisionInstance, GoodsInstance> instance;
  /// Allocation the family is built around (lemma6_upper, appendixA).
  std::optional<Allocation> witness;
  /// w1 / w2 at which weighted welfare is indifferent (weighted_welfare_gap).
  std::optional<Rational> critical_ratio;
  std::optional<Theorem5Constants> theorem5;
  /// appendixA: the schedule parameter that passed certification.
  std::optional<std::size_t> appendix_k;
};

/// Deterministic construction of the named family. Throws ValidationError on
/// bad parameters and Error when a certified family fails its own check.
Generated generate(Family family, const FamilyParams& params = {});

/// Two players, two issues, each player owns one issue.
DecisionInstance example1();
/// Two players, eight issues; player 2 only cares about the first four.
DecisionInstance example2();
/// Two players, two issues with an extreme and a 2/3-2/3 compromise alternative.
DecisionInstance compromise_instance();

/// n issues with two alternatives; certified by enumeration that the Nash
/// optimum picks the second alternative everywhere. Requires 2 <= n <= 20.
std::pair<DecisionInstance, Theorem5Constants> theorem5_instance(std::size_t n);

/// n players, n^2 goods, and an EF1 allocation giving player 1 a fraction
/// n/(2n-2) of her round robin share. Requires n >= 2.
std::pair<GoodsInstance, Allocation> lemma6_upper_instance(std::size_t n);

/// u1 = (1-d, 1-d, 1/2, 1/2), u2 = (1, 1, 0, 0). Requires 0 < delta < 1.
GoodsInstance theorem6_upper_instance(const Rational& delta);

struct AppendixAInstance {
  GoodsInstance goods;
  Allocation witness;
  std::size_t k = 0;
};

/// Goods instance with m > 4n-2 and an allocation that meets every round
/// robin share but not Prop1; audit-certified.
AppendixAInstance appendix_a_instance(std::size_t n, std::size_t m);

/// u1 = (4,4,1,1), u2 = (3,3,2,2); critical weight ratio w1/w2 = 3/4.
std::pair<GoodsInstance, Rational> weighted_welfare_gap_instance();

/// Uniform integer in [0, bound), reproducible across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform integer in [lo, hi].
std::int64_t uniform_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// n players, m issues, k_t uniform in [1, k_max], utilities uniform in [umin, umax].
DecisionInstance random_public_instance(std::size_t n, std::size_t m, std::size_t k_max,
                                        std::int64_t umin, std::int64_t umax,
                                        std::mt19937_64& rng);
/// n players, m goods, utilities uniform in [umin, umax].
GoodsInstance random_goods_instance(std::size_t n, std::size_t m, std::int64_t umin,
                                    std::int64_t umax, std::mt19937_64& rng);

}  // namespace fairdec

#endif  // FAIRDEC_GENERATORS_HPP_

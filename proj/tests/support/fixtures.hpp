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

#ifndef FAIRDEC_TESTS_FIXTURES_HPP_
#define FAIRDEC_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "fairdec/generators.hpp"
#include "fairdec/model.hpp"
#include "fairdec/rational.hpp"

namespace fairdec::test {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

/// issues[t][i][a] = utility of player i for alternative a of issue t.
inline DecisionInstance make_public(const std::vector<std::vector<std::vector<Rational>>>& issues) {
  DecisionInstance out;
  out.players = issues.front().size();
  for (const auto& rows : issues) {
    Issue issue;
    issue.alternative_count = rows.front().size();
    issue.utilities = rows;
    out.issues.push_back(std::move(issue));
  }
  return out;
}

inline GoodsInstance make_goods(const std::vector<std::vector<Rational>>& rows) {
  GoodsInstance out;
  out.players = rows.size();
  out.goods = rows.front().size();
  out.utilities = rows;
  return out;
}

inline std::vector<Rational> row(std::initializer_list<std::int64_t> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

/// Small random public instance: n in [1, max_n], m in [1, max_m], k_t in [1, max_k].
inline DecisionInstance small_public(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m,
                                     std::size_t max_k, std::int64_t umax) {
  const std::size_t n = 1 + uniform_below(rng, max_n);
  const std::size_t m = 1 + uniform_below(rng, max_m);
  return random_public_instance(n, m, max_k, 0, umax, rng);
}

inline GoodsInstance small_goods(std::mt19937_64& rng, std::size_t max_n, std::size_t max_m,
                                 std::int64_t umin, std::int64_t umax) {
  const std::size_t n = 1 + uniform_below(rng, max_n);
  const std::size_t m = 1 + uniform_below(rng, max_m);
  return random_goods_instance(n, m, umin, umax, rng);
}

}  // namespace fairdec::test

#endif  // FAIRDEC_TESTS_FIXTURES_HPP_

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

#ifndef FAIRDEC_ORACLES_HPP_
#define FAIRDEC_ORACLES_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "fairdec/enumeration.hpp"
#include "fairdec/mechanisms.hpp"
#include "fairdec/model.hpp"
#include "fairdec/private_goods.hpp"
#include "fairdec/rational.hpp"

namespace fairdec {

// Brute-force ground truth. Nothing here prunes: every function walks the
// full outcome (or allocation) space so it can check the searches in
// mechanisms.hpp and private_goods.hpp.

enum class Objective { kNash, kLeximin, kUtilitarian };

std::string_view objective_name(Objective objective);
/// Throws ValidationError on an unknown name.
Objective parse_objective(std::string_view name);

/// Optimal outcome by pure enumeration, with the same tie-breaking as the
/// mechanisms: lexicographically smallest choice vector among optima.
MechanismResult exact_optimum(const DecisionInstance& instance, Objective objective,
                              std::uint64_t cap = kDefaultOutcomeCap);

struct FrontierPoint {
  Outcome outcome;
  std::vector<Rational> utilities;

  friend bool operator==(const FrontierPoint&, const FrontierPoint&) = default;
};

/// Every non-dominated utility vector once, with its lexicographically least
/// outcome, ordered by that outcome.
std::vector<FrontierPoint> pareto_frontier(const DecisionInstance& instance,
                                           std::uint64_t cap = kDefaultOutcomeCap);

/// Every allocation that maximizes weighted welfare, i.e. every way of
/// breaking ties between argmax players good by good.
std::vector<Allocation> weighted_welfare_maximizers(const GoodsInstance& goods,
                                                    const WeightVector& weights,
                                                    std::uint64_t cap = kDefaultOutcomeCap);

struct ProductBound {
  /// sum_k max(0, 1 - x_k) <= delta.
  bool feasible = false;
  /// prod_k x_k >= 1 - delta.
  bool product_ok = false;
};

/// Evaluates both sides of the product lower bound for non-negative xs and
/// delta in (0, 1). Throws ValidationError outside that domain.
ProductBound feasible_product_lower_bound(const std::vector<Rational>& xs, const Rational& delta);

}  // namespace fairdec

#endif  // FAIRDEC_ORACLES_HPP_

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

#include "fairdec/model.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fairdec/errors.hpp"

namespace fairdec {
namespace {

std::string index_path(const std::string& prefix, std::size_t i) {
  return prefix + "[" + std::to_string(i) + "]";
}

void throw_if_any(const std::vector<Violation>& violations, const char* what) {
  if (violations.empty()) return;
  std::ostringstream os;
  os << "invalid " << what << ":";
  for (const auto& v : violations) os << "\n  " << v.path << ": " << v.message;
  throw ValidationError(os.str());
}

void check_names(const std::vector<std::string>& names, std::size_t expected,
                 const std::string& path, std::vector<Violation>& out) {
  if (!names.empty() && names.size() != expected) {
    out.push_back({path, "expected " + std::to_string(expected) + " labels, got " +
                             std::to_string(names.size())});
  }
}

}  // namespace

std::vector<Violation> validate(const DecisionInstance& instance) {
  std::vector<Violation> out;
  if (instance.players == 0) out.push_back({"players", "instance must have at least one player"});
  if (instance.issues.empty()) out.push_back({"issues", "instance must have at least one issue"});
  check_names(instance.player_names, instance.players, "player_names", out);

  for (std::size_t t = 0; t < instance.issues.size(); ++t) {
    const Issue& issue = instance.issues[t];
    const std::string base = index_path("issues", t);
    if (issue.alternative_count == 0) {
      out.push_back({base, "issue must have at least one alternative"});
    }
    check_names(issue.alternative_names, issue.alternative_count, base + ".alternative_names", out);
    if (issue.utilities.size() != instance.players) {
      out.push_back({base + ".utilities", "expected " + std::to_string(instance.players) +
                                              " rows, got " + std::to_string(issue.utilities.size())});
    }
    for (std::size_t i = 0; i < issue.utilities.size(); ++i) {
      const auto& row = issue.utilities[i];
      const std::string row_path = index_path(base + ".utilities", i);
      if (row.size() != issue.alternative_count) {
        out.push_back({row_path, "expected " + std::to_string(issue.alternative_count) +
                                     " entries, got " + std::to_string(row.size())});
      }
      for (std::size_t a = 0; a < row.size(); ++a) {
        if (row[a].sign() < 0) {
          out.push_back({index_path(row_path, a), "utility must be non-negative"});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> validate(const GoodsInstance& goods) {
  std::vector<Violation> out;
  if (goods.players == 0) out.push_back({"players", "instance must have at least one player"});
  if (goods.goods == 0) out.push_back({"goods", "instance must have at least one good"});
  check_names(goods.player_names, goods.players, "player_names", out);
  check_names(goods.good_names, goods.goods, "good_names", out);
  if (goods.utilities.size() != goods.players) {
    out.push_back({"utilities", "expected " + std::to_string(goods.players) + " rows, got " +
                                    std::to_string(goods.utilities.size())});
  }
  for (std::size_t i = 0; i < goods.utilities.size(); ++i) {
    const auto& row = goods.utilities[i];
    const std::string row_path = index_path("utilities", i);
    if (row.size() != goods.goods) {
      out.push_back({row_path, "expected " + std::to_string(goods.goods) + " entries, got " +
                                   std::to_string(row.size())});
    }
    for (std::size_t g = 0; g < row.size(); ++g) {
      if (row[g].sign() < 0) out.push_back({index_path(row_path, g), "utility must be non-negative"});
    }
  }
  return out;
}

void require_valid(const DecisionInstance& instance) {
  throw_if_any(validate(instance), "public decision instance");
}

void require_valid(const GoodsInstance& goods) { throw_if_any(validate(goods), "goods instance"); }

void require_valid_outcome(const DecisionInstance& instance, const Outcome& outcome) {
  std::vector<Violation> out;
  if (outcome.choices.size() != instance.issue_count()) {
    out.push_back({"choices", "expected " + std::to_string(instance.issue_count()) +
                                  " choices, got " + std::to_string(outcome.choices.size())});
  }
  const std::size_t n = std::min(outcome.choices.size(), instance.issue_count());
  for (std::size_t t = 0; t < n; ++t) {
    if (outcome.choices[t] >= instance.issues[t].alternative_count) {
      out.push_back({index_path("choices", t), "alternative index out of range"});
    }
  }
  throw_if_any(out, "outcome");
}

void require_valid_allocation(const GoodsInstance& goods, const Allocation& allocation) {
  std::vector<Violation> out;
  if (allocation.bundles.size() != goods.players) {
    out.push_back({"bundles", "expected " + std::to_string(goods.players) + " bundles, got " +
                                  std::to_string(allocation.bundles.size())});
  }
  std::vector<int> owners(goods.goods, 0);
  for (std::size_t i = 0; i < allocation.bundles.size(); ++i) {
    for (std::size_t g : allocation.bundles[i]) {
      if (g >= goods.goods) {
        out.push_back({index_path("bundles", i), "good index " + std::to_string(g) + " out of range"});
      } else {
        ++owners[g];
      }
    }
  }
  for (std::size_t g = 0; g < goods.goods; ++g) {
    if (owners[g] == 0) {
      out.push_back({index_path("goods", g), "good is not allocated"});
    } else if (owners[g] > 1) {
      out.push_back({index_path("goods", g), "good is allocated more than once"});
    }
  }
  throw_if_any(out, "allocation");
}

DecisionInstance goods_to_public(const GoodsInstance& goods) {
  require_valid(goods);
  DecisionInstance out;
  out.players = goods.players;
  out.player_names = goods.player_names;
  out.issues.reserve(goods.goods);
  for (std::size_t g = 0; g < goods.goods; ++g) {
    Issue issue;
    issue.alternative_count = goods.players;
    issue.utilities.assign(goods.players, std::vector<Rational>(goods.players, Rational(0)));
    for (std::size_t i = 0; i < goods.players; ++i) issue.utilities[i][i] = goods.utilities[i][g];
    if (!goods.good_names.empty()) issue.name = goods.good_names[g];
    if (!goods.player_names.empty()) {
      for (std::size_t i = 0; i < goods.players; ++i) {
        issue.alternative_names.push_back("to " + goods.player_names[i]);
      }
    }
    out.issues.push_back(std::move(issue));
  }
  return out;
}

Outcome allocation_to_outcome(const GoodsInstance& goods, const Allocation& allocation) {
  require_valid_allocation(goods, allocation);
  Outcome out;
  out.choices.assign(goods.goods, 0);
  for (std::size_t i = 0; i < allocation.bundles.size(); ++i) {
    for (std::size_t g : allocation.bundles[i]) out.choices[g] = i;
  }
  return out;
}

Allocation outcome_to_allocation(const GoodsInstance& goods, const Outcome& outcome) {
  if (outcome.choices.size() != goods.goods) {
    throw ValidationError("outcome has " + std::to_string(outcome.choices.size()) +
                          " choices for " + std::to_string(goods.goods) + " goods");
  }
  Allocation out;
  out.bundles.resize(goods.players);
  for (std::size_t g = 0; g < goods.goods; ++g) {
    if (outcome.choices[g] >= goods.players) {
      throw ValidationError("choice for good " + std::to_string(g) + " is not a player index");
    }
    out.bundles[outcome.choices[g]].push_back(g);
  }
  return out;
}

Rational outcome_utility(const DecisionInstance& instance, const Outcome& outcome,
                         std::size_t player) {
  if (player >= instance.players) {
    throw ValidationError("player index " + std::to_string(player) + " out of range");
  }
  require_valid_outcome(instance, outcome);
  Rational total;
  for (std::size_t t = 0; t < instance.issue_count(); ++t) {
    total += instance.utility(player, t, outcome.choices[t]);
  }
  return total;
}

std::vector<Rational> outcome_utilities(const DecisionInstance& instance, const Outcome& outcome) {
  require_valid_outcome(instance, outcome);
  std::vector<Rational> out(instance.players);
  for (std::size_t t = 0; t < instance.issue_count(); ++t) {
    for (std::size_t i = 0; i < instance.players; ++i) {
      out[i] += instance.utility(i, t, outcome.choices[t]);
    }
  }
  return out;
}

Rational bundle_utility(const GoodsInstance& goods, std::size_t player,
                        const std::vector<std::size_t>& bundle) {
  Rational total;
  for (std::size_t g : bundle) total += goods.utilities[player][g];
  return total;
}

std::vector<Rational> allocation_utilities(const GoodsInstance& goods,
                                           const Allocation& allocation) {
  require_valid_allocation(goods, allocation);
  std::vector<Rational> out;
  out.reserve(goods.players);
  for (std::size_t i = 0; i < goods.players; ++i) {
    out.push_back(bundle_utility(goods, i, allocation.bundles[i]));
  }
  return out;
}

MaxUtilityProfile sorted_max_utilities(const DecisionInstance& instance, std::size_t player) {
  if (player >= instance.players) {
    throw ValidationError("player index " + std::to_string(player) + " out of range");
  }
  MaxUtilityProfile out;
  out.per_issue.reserve(instance.issue_count());
  out.argmax.reserve(instance.issue_count());
  for (const Issue& issue : instance.issues) {
    const auto& row = issue.utilities[player];
    std::size_t best = 0;
    for (std::size_t a = 1; a < row.size(); ++a) {
      if (row[a] > row[best]) best = a;
    }
    out.argmax.push_back(best);
    out.per_issue.push_back(row.empty() ? Rational(0) : row[best]);
  }
  out.sorted = out.per_issue;
  std::sort(out.sorted.begin(), out.sorted.end(), std::greater<>());
  return out;
}

std::vector<Rational> sorted_good_utilities(const GoodsInstance& goods, std::size_t player) {
  std::vector<Rational> out = goods.utilities.at(player);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string player_label(const std::vector<std::string>& names, std::size_t player) {
  if (player < names.size()) return names[player];
  return "p" + std::to_string(player + 1);
}

}  // namespace fairdec

// Copyright 2026 The Matchkit Authors.
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

// Brute-force oracles for the cycle problems and the pipelines that solve
// them through the gadget reduction and the l-th smallest matching engine.

#ifndef MATCHKIT_CYCLE_ORACLES_HPP_
#define MATCHKIT_CYCLE_ORACLES_HPP_

#include <functional>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/spm.hpp"

namespace matchkit {

inline constexpr int kDefaultCycleBruteLimit = 12;

// Every simple cycle exactly once up to rotation and reflection. Each cycle
// starts at its smallest vertex.
std::vector<Cycle> enumerate_simple_cycles(const Graph& g);

// Visits every set of vertex-disjoint simple cycles once, the empty set
// included. `visit` returns false to stop early. Throws kSizeLimit above
// `vertex_limit` vertices.
void for_each_cycle_set(const Graph& g,
                        const std::function<bool(const CycleSet&)>& visit,
                        int vertex_limit = kDefaultCycleBruteLimit);

// Distinct total weights over all cycle sets (0 for the empty set).
std::set<Weight> cycle_set_weights(const WeightedInstance& inst,
                                   int vertex_limit = kDefaultCycleBruteLimit);

// A cycle set of total weight exactly target_k, if any.
std::optional<CycleSet> ecs_bruteforce(const WeightedInstance& inst,
                                       int vertex_limit = kDefaultCycleBruteLimit);

// A minimum-weight odd-weight cycle, if its weight is at most target_k.
std::optional<Cycle> soc_bruteforce(const WeightedInstance& inst,
                                    int vertex_limit = kDefaultCycleBruteLimit);

struct CycleSolveOutcome {
  struct Found {
    CycleSet cycles;  // a single cycle for SOC
    Weight weight = 0;
  };
  struct DefiniteNo {};
  struct BudgetExceeded {
    int ranks_explored = 0;
  };

  std::variant<Found, DefiniteNo, BudgetExceeded> value;

  bool is_found() const { return std::holds_alternative<Found>(value); }
  bool is_no() const { return std::holds_alternative<DefiniteNo>(value); }
  bool is_budget_exceeded() const {
    return std::holds_alternative<BudgetExceeded>(value);
  }
  const Found& found() const { return std::get<Found>(value); }
};

inline constexpr int kDefaultBudget = 8;

// Exact cycle sum via the gadget reduction and ewpm_solve.
CycleSolveOutcome ecs_solve(const WeightedInstance& inst,
                            int budget_l = kDefaultBudget,
                            const SpmOptions& options = {});

// Shortest odd cycle via the gadget reduction and bcpm_solve. The projected
// cycle set has odd total weight at most k; with conservative weights every
// member weighs at least 0, so an odd member of weight at most k exists and
// is returned alone.
CycleSolveOutcome soc_solve(const WeightedInstance& inst,
                            int budget_l = kDefaultBudget,
                            const SpmOptions& options = {});

}  // namespace matchkit

#endif  // MATCHKIT_CYCLE_ORACLES_HPP_

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

// l-th smallest perfect matching by forced-set enumeration, and the exact
// weight / bounded correct-parity decision procedures built on it.
//
// The distinct perfect-matching weights k_1 < k_2 < ... are recovered by
// forcing every vertex-disjoint edge set F of size at most 2(r - 1)
// (r - 1 on bipartite graphs) and taking the minimum-weight perfect matching
// containing F: the r-th smallest weight is always among those minima.

#ifndef MATCHKIT_SPM_HPP_
#define MATCHKIT_SPM_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/pm_solver.hpp"

namespace matchkit {

enum class BipartiteBound {
  kAuto,  // use the r - 1 bound iff the graph is bipartite
  kOn,
  kOff,
};

struct SpmOptions {
  BipartiteBound bipartite_bound = BipartiteBound::kAuto;
  // Threads evaluating one forced-set size level; 0 means one per core.
  // The result does not depend on this value.
  unsigned workers = 1;
};

struct RankEntry {
  int rank = 0;
  Weight weight = 0;
  Matching witness;
  ForcedSet forced_set;
};

struct RankTable {
  std::vector<RankEntry> entries;
  // True iff the graph is known to have no perfect-matching weight beyond
  // the listed ones.
  bool complete = false;
};

struct SolveOutcome {
  struct Found {
    PmResult result;
    int rank = 0;
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

// The min(l, #distinct) smallest distinct perfect-matching weights with
// witnesses and the forced sets that produced them. `complete` is exact: the
// last entry is the heaviest perfect matching. Throws kMalformed for l < 1.
RankTable spm_ranks(const WeightedInstance& inst, int l,
                    const SpmOptions& options = {});

// Ground truth from exhaustive enumeration; forced sets are empty and each
// witness is the lexicographically first matching of its weight. Throws
// kSizeLimit above `vertex_limit` vertices.
RankTable spm_ranks_bruteforce(const WeightedInstance& inst, int l,
                               int vertex_limit = 12);

// True iff the rank_l-th smallest perfect-matching weight equals target_k.
bool spm_decide(const WeightedInstance& inst, const SpmOptions& options = {});

// Perfect matching of weight exactly target_k, exploring at most `budget_l`
// ranks.
SolveOutcome ewpm_solve(const WeightedInstance& inst, int budget_l,
                        const SpmOptions& options = {});

// Perfect matching of weight at most target_k with the parity of target_k,
// exploring at most `budget_l` ranks.
SolveOutcome bcpm_solve(const WeightedInstance& inst, int budget_l,
                        const SpmOptions& options = {});

}  // namespace matchkit

#endif  // MATCHKIT_SPM_HPP_

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

// Minimum-weight perfect matching, its forced-edge variant, and the
// exhaustive perfect-matching enumerator used as a verification oracle.

#ifndef MATCHKIT_PM_SOLVER_HPP_
#define MATCHKIT_PM_SOLVER_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

// Edges a perfect matching is required to contain. Member edges must be
// pairwise vertex-disjoint.
struct ForcedSet {
  std::vector<EdgeId> edges;

  friend bool operator==(const ForcedSet&, const ForcedSet&) = default;
};

struct PmResult {
  Matching matching;
  Weight weight = 0;
};

// Globally minimum-weight perfect matching, or nullopt if `g` has none.
// Negative weights are allowed. The result is a pure function of the input.
std::optional<PmResult> min_weight_pm(const Graph& g, std::span<const Weight> w);

// Minimum-weight perfect matching containing every edge of `forced`.
// Deletes both endpoints of each forced edge, solves the remainder and adds
// w(forced). Throws kForcedSetConflict when forced edges share a vertex and
// kBadId for out-of-range edge ids.
std::optional<PmResult> min_weight_pm_forced(const Graph& g,
                                             std::span<const Weight> w,
                                             const ForcedSet& forced);

// Calls `visit` once per perfect matching (edge ids sorted), in no
// particular order. Exponential; meant for small graphs.
void for_each_perfect_matching(const Graph& g,
                               const std::function<void(const Matching&)>& visit);

// Every perfect matching exactly once, in lexicographic order of the sorted
// edge-index sets.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g);

// w(m) if `m` is a perfect matching of `g`, nullopt otherwise. Throws kBadId
// for edge ids outside the graph.
std::optional<Weight> verify_perfect_matching(const Graph& g,
                                              std::span<const Weight> w,
                                              const Matching& m);

}  // namespace matchkit

#endif  // MATCHKIT_PM_SOLVER_HPP_

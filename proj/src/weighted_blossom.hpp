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

#ifndef MATCHKIT_SRC_WEIGHTED_BLOSSOM_HPP_
#define MATCHKIT_SRC_WEIGHTED_BLOSSOM_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace matchkit::detail {

struct BlossomEdge {
  int u;
  int v;
  std::int64_t weight;
};

// Maximum-weight matching in a general graph (Edmonds' blossom algorithm
// with dual variables, O(n^3)). With `max_cardinality` the result is a
// maximum-weight matching among the maximum-cardinality ones.
//
// All weights must be even so the dual updates stay integral. Returns the
// mate of every vertex, or -1 for exposed vertices.
std::vector<int> max_weight_matching(int vertex_count,
                                     std::span<const BlossomEdge> edges,
                                     bool max_cardinality);

}  // namespace matchkit::detail

#endif  // MATCHKIT_SRC_WEIGHTED_BLOSSOM_HPP_

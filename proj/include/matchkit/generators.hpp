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

// Seeded random instances and the tightness families for the forced-set
// bounds.

#ifndef MATCHKIT_GENERATORS_HPP_
#define MATCHKIT_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "matchkit/graph.hpp"

namespace matchkit {

struct WeightRange {
  Weight lo = 0;
  Weight hi = 0;
};

// G(n, p) with uniform integer weights. Cycle kinds are made conservative
// by resampling and, failing that, by raising the most negative weight to 0
// until no negative cycle remains. target_k is uniform between the minimum
// and maximum achievable value (perfect-matching weight or cycle-set
// weight), falling back to the range n/2 * [lo, hi] when no perfect
// matching exists. SPM instances get a rank in [1, 4].
// Throws kMalformed for n < 1, p outside [0, 1] or an empty range.
WeightedInstance gen_random_instance(int n, double edge_prob, WeightRange range,
                                     ProblemKind kind, std::uint64_t seed);

// Same, with exactly `edge_count` edges chosen uniformly.
WeightedInstance gen_random_instance_m(int n, int edge_count, WeightRange range,
                                       ProblemKind kind, std::uint64_t seed);

enum class TightnessSide { kBipartite, kGeneral };

// l - 1 disjoint copies of a small graph whose two perfect-matching weights
// are only separated by forcing 1 edge (four-cycle, weights {0, 2}) or 2
// edges (triangular prism, weights {1, 3}). Returned as an SPM instance
// with rank l and target equal to the l-th smallest weight.
WeightedInstance gen_tightness_family(int l, TightnessSide side);

struct TightnessWitness {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Weight> weights;

  friend bool operator==(const TightnessWitness&, const TightnessWitness&) = default;
};

// The embedded general-side witness.
const TightnessWitness& general_tightness_witness();

// Exhaustive search that produced the embedded witness: even n in {4, 6, 8}
// ascending, then edge count, then edge sets in lexicographic order, then
// weights in {0..3}^m lexicographically. Accepts the first non-bipartite
// graph where every edge lies in a perfect matching, the perfect-matching
// weights are exactly {1, 3}, every single forced edge reaches weight 1 and
// some forced pair reaches 3.
std::optional<TightnessWitness> search_tightness_witness(int max_vertices = 8);

}  // namespace matchkit

#endif  // MATCHKIT_GENERATORS_HPP_

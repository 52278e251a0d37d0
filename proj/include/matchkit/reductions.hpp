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

// Weight-preserving reductions between the matching problems (exact weight,
// bounded correct parity) and the cycle problems on conservative weights
// (exact cycle sum, shortest odd cycle), with certificate translation in
// both directions.

#ifndef MATCHKIT_REDUCTIONS_HPP_
#define MATCHKIT_REDUCTIONS_HPP_

#include <optional>
#include <span>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/pm_solver.hpp"

namespace matchkit {

// Matching -> cycle direction. The source weights are first shifted by
// `shift` so they are non-negative; the cycle instance lives on the same
// graph with every edge of `base_matching` weighted -(w + r + 1) and every
// other edge w + r + 1, so a cycle set of weight at most r - base_weight
// consists of base-alternating cycles.
struct AlternatingContext {
  Matching base_matching;  // minimum-weight perfect matching of the source
  Weight base_weight = 0;  // its weight under the shifted weights
  Weight r = 0;            // shifted target
  Weight shift = 0;
  WeightedInstance source;

  friend bool operator==(const AlternatingContext&,
                         const AlternatingContext&) = default;
};

// Cycle -> matching direction. Each source vertex v becomes a matched pair
// (v1, v2); each source edge e = {u, v} becomes the path e_u e_uv e_vu e_v
// attached to both copies of u and v, carrying w(e) on its middle edge.
struct GadgetContext {
  struct VertexPair {
    Vertex first;
    Vertex second;
    friend bool operator==(const VertexPair&, const VertexPair&) = default;
  };
  struct EdgeChain {
    Vertex at_u;    // e_u
    Vertex mid_u;   // e_uv
    Vertex mid_v;   // e_vu
    Vertex at_v;    // e_v
    EdgeId middle;  // gadget edge {e_uv, e_vu}
    friend bool operator==(const EdgeChain&, const EdgeChain&) = default;
  };

  Matching canonical_matching;  // weight 0, perfect
  std::vector<VertexPair> vertex_map;
  std::vector<EdgeChain> edge_map;
  WeightedInstance source;

  friend bool operator==(const GadgetContext&, const GadgetContext&) = default;
};

enum class Resolution { kNone, kYes, kNo };

struct AlternatingReduction {
  WeightedInstance instance;  // canonical YES/NO instance when resolved
  Resolution resolution = Resolution::kNone;
  std::optional<AlternatingContext> context;  // absent iff no perfect matching
};

struct GadgetReduction {
  WeightedInstance instance;
  GadgetContext context;
};

// Cycle instances with a fixed answer: a single vertex with target 1 has no
// cycle set of weight 1; the unit triangle with target 3 is a YES instance
// of both cycle problems.
WeightedInstance canonical_no_instance(ProblemKind kind);
WeightedInstance canonical_yes_instance(ProblemKind kind);

AlternatingReduction reduce_ewpm_to_ecs(const WeightedInstance& inst);
AlternatingReduction reduce_bcpm_to_soc(const WeightedInstance& inst);

// base_matching switched along every cycle, weighed with the original source
// weights. Throws kNotAlternating / kNotDisjoint / kInvalidCycle.
PmResult lift_cycles_to_matching(const CycleSet& cycles,
                                 const AlternatingContext& ctx);

// The gadget instance with target k (kind EWPM).
GadgetReduction reduce_ecs_to_ewpm(const WeightedInstance& inst);
// Same gadget (kind BCPM); an even target k is lowered to k - 1.
GadgetReduction reduce_soc_to_bcpm(const WeightedInstance& inst);

// The gadget graph and weights for an arbitrary weighted graph; the returned
// context has an empty source instance.
struct Gadget {
  Graph graph;
  std::vector<Weight> weights;
  GadgetContext context;
};
Gadget build_cycle_gadget(const Graph& g, std::span<const Weight> w);

// Source cycles encoded by a perfect matching of the gadget: the cycles of
// canonical_matching XOR m_star, each mapped to the source edges whose
// middle gadget edge it uses. Throws kNotPerfect.
CycleSet project_matching_to_cycles(const Matching& m_star,
                                    const GadgetContext& ctx);

// True iff no cycle has negative total weight. The minimum-weight perfect
// matching of the gadget equals the minimum weight of a cycle set, which
// is 0 (the empty set) exactly when no negative cycle exists.
bool is_conservative(const Graph& g, std::span<const Weight> w);

// Replaces every even-weight edge {u,v} of weight w by a path u-x-v with
// weights 1 and w - 1. All output weights are odd, so a cycle has odd weight
// iff it has odd length; cycle weights are unchanged.
WeightedInstance soc_odd_weight_to_odd_length(const WeightedInstance& inst);

// Maps an odd-length instance (cycle of odd length with weight at most k)
// to an odd-weight one: w -> 2|V|w + 1, k -> 2|V|k + |V|.
WeightedInstance soc_odd_length_to_odd_weight(const WeightedInstance& inst);

}  // namespace matchkit

#endif  // MATCHKIT_REDUCTIONS_HPP_

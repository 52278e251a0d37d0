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

// Graph and instance data model shared by every module.
//
// Vertices are 0-based internally (files use 1-based ids). An edge is
// identified by its position in the edge list for the lifetime of the graph.

#ifndef MATCHKIT_GRAPH_HPP_
#define MATCHKIT_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matchkit/error.hpp"

namespace matchkit {

using Vertex = int;
using EdgeId = int;
using Weight = std::int64_t;

// Endpoint order is kept as given so files round-trip; the pair is
// otherwise treated as unordered.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph. The constructor rejects self-loops, parallel
// edges and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, std::vector<Edge> edges = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }

  // Endpoint of `e` opposite to `v`.
  Vertex other(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v);

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_map<std::uint64_t, EdgeId> index_;
};

enum class ProblemKind { kEwpm, kBcpm, kEcs, kSoc, kSpm };

std::string_view to_string(ProblemKind kind);
std::optional<ProblemKind> parse_kind(std::string_view token);

inline bool is_cycle_kind(ProblemKind kind) {
  return kind == ProblemKind::kEcs || kind == ProblemKind::kSoc;
}

struct WeightedInstance {
  Graph graph;
  std::vector<Weight> weights;  // one per edge index
  ProblemKind kind = ProblemKind::kEwpm;
  Weight target_k = 0;
  std::optional<int> rank_l;  // present iff kind == kSpm

  friend bool operator==(const WeightedInstance&,
                         const WeightedInstance&) = default;
};

// Edge-index set, kept sorted ascending.
struct Matching {
  std::vector<EdgeId> edges;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

// A simple cycle as a cyclically ordered edge sequence.
struct Cycle {
  std::vector<EdgeId> edges;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

// Vertex-disjoint simple cycles. Empty is valid and weighs 0.
struct CycleSet {
  std::vector<Cycle> cycles;

  friend bool operator==(const CycleSet&, const CycleSet&) = default;
};

Weight total_weight(std::span<const Weight> weights, std::span<const EdgeId> edges);

// Sorts and returns the edge ids of `m`; throws kBadId / kNotDisjoint when
// the ids are out of range or two edges share a vertex.
Matching make_matching(const Graph& g, std::vector<EdgeId> edges);

bool is_perfect(const Graph& g, const Matching& m);

// Vertex sequence v0 v1 ... v(t-1) traced by `c`, where edge i joins v(i)
// and v(i+1 mod t). Throws kInvalidCycle unless `c` is a simple closed walk
// of length at least 3.
std::vector<Vertex> cycle_vertices(const Graph& g, const Cycle& c);

// Builds a cycle from a closed vertex sequence; throws kInvalidCycle if a
// consecutive pair is not an edge or a vertex repeats.
Cycle cycle_from_vertices(const Graph& g, std::span<const Vertex> vertices);

// Throws unless every cycle is simple and the cycles are pairwise
// vertex-disjoint.
void check_cycle_set(const Graph& g, const CycleSet& cs);

Weight cycle_weight(std::span<const Weight> weights, const Cycle& c);
Weight cycle_set_weight(std::span<const Weight> weights, const CycleSet& cs);

// Two-coloring (0/1 per vertex) if the graph has no odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);
inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// Checks the instance invariants: weight list length, rank presence for
// SPM, weight headroom for the reductions, and conservative weights for
// cycle kinds. Throws Error with a code identifying the violated invariant.
void validate_instance(const WeightedInstance& inst);

// Overflow-checked arithmetic; throw kWeightOverflow.
Weight checked_add(Weight a, Weight b);
Weight checked_sub(Weight a, Weight b);
Weight checked_mul(Weight a, Weight b);

}  // namespace matchkit

#endif  // MATCHKIT_GRAPH_HPP_

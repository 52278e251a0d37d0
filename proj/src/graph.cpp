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

#include "matchkit/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "matchkit/reductions.hpp"

namespace matchkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformed: return "malformed";
    case ErrorCode::kMissingProblemLine: return "missing-problem-line";
    case ErrorCode::kEdgeCountMismatch: return "edge-count-mismatch";
    case ErrorCode::kBadId: return "bad-id";
    case ErrorCode::kNonSimple: return "non-simple";
    case ErrorCode::kWeightOverflow: return "weight-overflow";
    case ErrorCode::kNonConservative: return "non-conservative";
    case ErrorCode::kMissingRank: return "missing-rank";
    case ErrorCode::kForcedSetConflict: return "forced-set-conflict";
    case ErrorCode::kNotAlternating: return "not-alternating";
    case ErrorCode::kNotDisjoint: return "not-disjoint";
    case ErrorCode::kNotPerfect: return "not-perfect";
    case ErrorCode::kInvalidCycle: return "invalid-cycle";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kContextMismatch: return "context-mismatch";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw Error(ErrorCode::kBadId, "negative vertex count");
  }
  incident_.resize(static_cast<std::size_t>(vertex_count_));
  index_.reserve(edges_.size());
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const auto [u, v] = edges_[static_cast<std::size_t>(e)];
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
      throw Error(ErrorCode::kBadId, "edge " + std::to_string(e) +
                                         " has an endpoint out of range");
    }
    if (u == v) {
      throw Error(ErrorCode::kNonSimple,
                  "self-loop at vertex " + std::to_string(u + 1));
    }
    if (!index_.emplace(key(u, v), e).second) {
      throw Error(ErrorCode::kNonSimple, "duplicate edge {" +
                                             std::to_string(u + 1) + "," +
                                             std::to_string(v + 1) + "}");
    }
    incident_[static_cast<std::size_t>(u)].push_back(e);
    incident_[static_cast<std::size_t>(v)].push_back(e);
  }
}

std::uint64_t Graph::key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kEwpm: return "ewpm";
    case ProblemKind::kBcpm: return "bcpm";
    case ProblemKind::kEcs: return "ecs";
    case ProblemKind::kSoc: return "soc";
    case ProblemKind::kSpm: return "spm";
  }
  return "?";
}

std::optional<ProblemKind> parse_kind(std::string_view token) {
  for (auto kind : {ProblemKind::kEwpm, ProblemKind::kBcpm, ProblemKind::kEcs,
                    ProblemKind::kSoc, ProblemKind::kSpm}) {
    if (token == to_string(kind)) return kind;
  }
  return std::nullopt;
}

Weight checked_add(Weight a, Weight b) {
  Weight r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kWeightOverflow, "weight arithmetic overflow");
  }
  return r;
}

Weight checked_sub(Weight a, Weight b) {
  Weight r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::kWeightOverflow, "weight arithmetic overflow");
  }
  return r;
}

Weight checked_mul(Weight a, Weight b) {
  Weight r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kWeightOverflow, "weight arithmetic overflow");
  }
  return r;
}

Weight total_weight(std::span<const Weight> weights,
                    std::span<const EdgeId> edges) {
  Weight sum = 0;
  for (EdgeId e : edges) sum = checked_add(sum, weights[static_cast<std::size_t>(e)]);
  return sum;
}

Matching make_matching(const Graph& g, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeId e = edges[i];
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorCode::kBadId, "edge index " + std::to_string(e) +
                                         " out of range");
    }
    if (i > 0 && edges[i - 1] == e) {
      throw Error(ErrorCode::kNotDisjoint, "edge listed twice");
    }
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      if (covered[static_cast<std::size_t>(x)]++) {
        throw Error(ErrorCode::kNotDisjoint,
                    "vertex " + std::to_string(x + 1) + " covered twice");
      }
    }
  }
  return Matching{std::move(edges)};
}

bool is_perfect(const Graph& g, const Matching& m) {
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : m.edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      if (covered[static_cast<std::size_t>(x)]++) return false;
    }
  }
  return std::all_of(covered.begin(), covered.end(),
                     [](char c) { return c == 1; });
}

std::vector<Vertex> cycle_vertices(const Graph& g, const Cycle& c) {
  const std::size_t t = c.edges.size();
  if (t < 3) throw Error(ErrorCode::kInvalidCycle, "cycle shorter than 3");
  for (EdgeId e : c.edges) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorCode::kBadId, "cycle edge index out of range");
    }
  }
  // v0 is the endpoint of edge 0 not shared with edge 1.
  const Edge& first = g.edge(c.edges[0]);
  const Edge& second = g.edge(c.edges[1]);
  Vertex start;
  if (first.v == second.u || first.v == second.v) {
    start = first.u;
  } else if (first.u == second.u || first.u == second.v) {
    start = first.v;
  } else {
    throw Error(ErrorCode::kInvalidCycle, "consecutive cycle edges not adjacent");
  }
  std::vector<Vertex> seq;
  seq.reserve(t);
  Vertex at = start;
  for (EdgeId e : c.edges) {
    const Edge& ed = g.edge(e);
    if (ed.u != at && ed.v != at) {
      throw Error(ErrorCode::kInvalidCycle, "cycle edges do not form a walk");
    }
    seq.push_back(at);
    at = g.other(e, at);
  }
  if (at != start) throw Error(ErrorCode::kInvalidCycle, "cycle is not closed");
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidCycle, "cycle repeats a vertex");
  }
  return seq;
}

Cycle cycle_from_vertices(const Graph& g, std::span<const Vertex> vertices) {
  Cycle c;
  const std::size_t t = vertices.size();
  for (std::size_t i = 0; i < t; ++i) {
    const Vertex a = vertices[i];
    const Vertex b = vertices[(i + 1) % t];
    if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count()) {
      throw Error(ErrorCode::kBadId, "cycle vertex out of range");
    }
    auto e = g.find_edge(a, b);
    if (!e) {
      throw Error(ErrorCode::kInvalidCycle,
                  "no edge {" + std::to_string(a + 1) + "," +
                      std::to_string(b + 1) + "}");
    }
    c.edges.push_back(*e);
  }
  cycle_vertices(g, c);
  return c;
}

void check_cycle_set(const Graph& g, const CycleSet& cs) {
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Cycle& c : cs.cycles) {
    for (Vertex v : cycle_vertices(g, c)) {
      if (used[static_cast<std::size_t>(v)]++) {
        throw Error(ErrorCode::kNotDisjoint,
                    "cycles share vertex " + std::to_string(v + 1));
      }
    }
  }
}

Weight cycle_weight(std::span<const Weight> weights, const Cycle& c) {
  return total_weight(weights, c.edges);
}

Weight cycle_set_weight(std::span<const Weight> weights, const CycleSet& cs) {
  Weight sum = 0;
  for (const Cycle& c : cs.cycles) sum = checked_add(sum, cycle_weight(weights, c));
  return sum;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (EdgeId e : g.incident(x)) {
        const Vertex y = g.other(e, x);
        int& cy = color[static_cast<std::size_t>(y)];
        if (cy < 0) {
          cy = 1 - color[static_cast<std::size_t>(x)];
          queue.push(y);
        } else if (cy == color[static_cast<std::size_t>(x)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

// Headroom for every weight transform applied downstream: the alternating
// transform (|w| + r + 1 after a non-negative shift), the gadget, the
// odd-length transform (2|V|w + 1) and the doubled integer weights inside
// the blossom solver. Generous by a constant factor.
void check_weight_headroom(const WeightedInstance& inst) {
  Weight max_abs = 0;
  for (Weight w : inst.weights) {
    if (w == std::numeric_limits<Weight>::min()) {
      throw Error(ErrorCode::kWeightOverflow, "weight out of range");
    }
    max_abs = std::max(max_abs, w < 0 ? -w : w);
  }
  if (inst.target_k == std::numeric_limits<Weight>::min()) {
    throw Error(ErrorCode::kWeightOverflow, "target out of range");
  }
  const Weight abs_k = inst.target_k < 0 ? -inst.target_k : inst.target_k;
  const Weight n = static_cast<Weight>(inst.graph.vertex_count()) +
                   static_cast<Weight>(inst.graph.edge_count()) + 1;
  try {
    const Weight per_edge =
        checked_add(checked_add(checked_mul(max_abs, 4), checked_mul(abs_k, 2)), 4);
    checked_mul(checked_mul(per_edge, checked_mul(n, n)), 16);
  } catch (const Error&) {
    throw Error(ErrorCode::kWeightOverflow,
                "weights or target too large for the reductions");
  }
}

}  // namespace

void validate_instance(const WeightedInstance& inst) {
  const Graph& g = inst.graph;
  if (g.vertex_count() < 1) {
    throw Error(ErrorCode::kBadId, "vertex count must be positive");
  }
  // Re-run the structural checks so instances assembled by hand are covered.
  Graph(g.vertex_count(), std::vector<Edge>(g.edges().begin(), g.edges().end()));
  if (inst.weights.size() != static_cast<std::size_t>(g.edge_count())) {
    throw Error(ErrorCode::kEdgeCountMismatch,
                "weight list length differs from edge count");
  }
  if (inst.kind == ProblemKind::kSpm) {
    if (!inst.rank_l || *inst.rank_l < 1) {
      throw Error(ErrorCode::kMissingRank, "spm instance needs a rank >= 1");
    }
  } else if (inst.rank_l) {
    throw Error(ErrorCode::kMalformed, "rank given for a non-spm instance");
  }
  check_weight_headroom(inst);
  if (is_cycle_kind(inst.kind) && !is_conservative(g, inst.weights)) {
    throw Error(ErrorCode::kNonConservative,
                "cycle instance has a negative cycle");
  }
}

}  // namespace matchkit

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

#include "matchkit/pm_solver.hpp"

#include <algorithm>
#include <string>

#include "weighted_blossom.hpp"

namespace matchkit {

namespace {

// Minimum-weight perfect matching of the graph given by a raw edge list.
// Returns indices into `edges`, sorted.
std::optional<std::vector<int>> solve_min_pm(int n, std::span<const Edge> edges,
                                             std::span<const Weight> w) {
  if (n % 2 != 0) return std::nullopt;
  if (n == 0) return std::vector<int>{};
  if (static_cast<int>(edges.size()) < n / 2) return std::nullopt;

  // A perfect matching has n/2 edges, so maximizing sum(top - w) over
  // maximum-cardinality matchings minimizes sum(w) over perfect ones. The
  // blossom solver wants positive, even weights.
  Weight top = w[0];
  for (Weight x : w) top = std::max(top, x);
  top = checked_add(top, 1);
  std::vector<detail::BlossomEdge> flipped;
  flipped.reserve(edges.size());
  Weight heaviest = 0;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Weight doubled = checked_mul(checked_sub(top, w[k]), 2);
    heaviest = std::max(heaviest, doubled);
    flipped.push_back({edges[k].u, edges[k].v, doubled});
  }
  // Dual variables stay within a small multiple of the heaviest edge.
  checked_mul(heaviest, static_cast<Weight>(n) + 2);

  const std::vector<int> mate = detail::max_weight_matching(n, flipped, true);
  if (std::find(mate.begin(), mate.end(), -1) != mate.end()) return std::nullopt;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(n / 2));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (mate[static_cast<std::size_t>(edges[k].u)] == edges[k].v) {
      chosen.push_back(static_cast<int>(k));
    }
  }
  return chosen;
}

}  // namespace

std::optional<PmResult> min_weight_pm(const Graph& g, std::span<const Weight> w) {
  auto chosen = solve_min_pm(g.vertex_count(), g.edges(), w);
  if (!chosen) return std::nullopt;
  PmResult result;
  result.matching.edges = std::move(*chosen);
  result.weight = total_weight(w, result.matching.edges);
  return result;
}

std::optional<PmResult> min_weight_pm_forced(const Graph& g,
                                             std::span<const Weight> w,
                                             const ForcedSet& forced) {
  if (forced.edges.empty()) return min_weight_pm(g, w);

  std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : forced.edges) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorCode::kBadId, "forced edge " + std::to_string(e) +
                                         " out of range");
    }
    for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
      if (removed[static_cast<std::size_t>(x)]++) {
        throw Error(ErrorCode::kForcedSetConflict,
                    "forced edges share vertex " + std::to_string(x + 1));
      }
    }
  }

  std::vector<Vertex> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
  int kept = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!removed[static_cast<std::size_t>(v)]) relabel[static_cast<std::size_t>(v)] = kept++;
  }
  std::vector<Edge> sub_edges;
  std::vector<Weight> sub_weights;
  std::vector<EdgeId> origin;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Vertex a = relabel[static_cast<std::size_t>(g.edge(e).u)];
    const Vertex b = relabel[static_cast<std::size_t>(g.edge(e).v)];
    if (a < 0 || b < 0) continue;
    sub_edges.push_back({a, b});
    sub_weights.push_back(w[static_cast<std::size_t>(e)]);
    origin.push_back(e);
  }
  auto rest = solve_min_pm(kept, sub_edges, sub_weights);
  if (!rest) return std::nullopt;

  PmResult result;
  result.matching.edges = forced.edges;
  for (int k : *rest) result.matching.edges.push_back(origin[static_cast<std::size_t>(k)]);
  std::sort(result.matching.edges.begin(), result.matching.edges.end());
  result.weight = total_weight(w, result.matching.edges);
  return result;
}

namespace {

void extend(const Graph& g, std::vector<char>& covered, Vertex from,
            std::vector<EdgeId>& chosen,
            const std::function<void(const Matching&)>& visit) {
  Vertex v = from;
  while (v < g.vertex_count() && covered[static_cast<std::size_t>(v)]) ++v;
  if (v == g.vertex_count()) {
    Matching m{chosen};
    std::sort(m.edges.begin(), m.edges.end());
    visit(m);
    return;
  }
  covered[static_cast<std::size_t>(v)] = 1;
  for (EdgeId e : g.incident(v)) {
    const Vertex u = g.other(e, v);
    if (covered[static_cast<std::size_t>(u)]) continue;
    covered[static_cast<std::size_t>(u)] = 1;
    chosen.push_back(e);
    extend(g, covered, v + 1, chosen, visit);
    chosen.pop_back();
    covered[static_cast<std::size_t>(u)] = 0;
  }
  covered[static_cast<std::size_t>(v)] = 0;
}

}  // namespace

void for_each_perfect_matching(const Graph& g,
                               const std::function<void(const Matching&)>& visit) {
  if (g.vertex_count() % 2 != 0) return;
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<EdgeId> chosen;
  extend(g, covered, 0, chosen, visit);
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g) {
  std::vector<Matching> all;
  for_each_perfect_matching(g, [&](const Matching& m) { all.push_back(m); });
  std::sort(all.begin(), all.end());
  return all;
}

std::optional<Weight> verify_perfect_matching(const Graph& g,
                                              std::span<const Weight> w,
                                              const Matching& m) {
  for (EdgeId e : m.edges) {
    if (e < 0 || e >= g.edge_count()) {
      throw Error(ErrorCode::kBadId, "matching edge " + std::to_string(e) +
                                         " out of range");
    }
  }
  if (!is_perfect(g, m)) return std::nullopt;
  return total_weight(w, m.edges);
}

}  // namespace matchkit

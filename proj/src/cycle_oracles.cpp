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

#include "matchkit/cycle_oracles.hpp"

#include <cstdint>
#include <string>

#include "matchkit/reductions.hpp"

namespace matchkit {
namespace {

void extend_path(const Graph& g, Vertex start, std::vector<Vertex>& path,
                 std::vector<EdgeId>& edges, std::vector<char>& on_path,
                 std::vector<Cycle>& out) {
  const Vertex at = path.back();
  for (EdgeId e : g.incident(at)) {
    const Vertex next = g.other(e, at);
    if (next == start) {
      // Close only paths of 3+ vertices, and keep one of the two directions.
      if (path.size() >= 3 && path[1] < path.back()) {
        Cycle c{edges};
        c.edges.push_back(e);
        out.push_back(std::move(c));
      }
      continue;
    }
    if (next < start || on_path[static_cast<std::size_t>(next)]) continue;
    on_path[static_cast<std::size_t>(next)] = 1;
    path.push_back(next);
    edges.push_back(e);
    extend_path(g, start, path, edges, on_path, out);
    edges.pop_back();
    path.pop_back();
    on_path[static_cast<std::size_t>(next)] = 0;
  }
}

void check_limit(const Graph& g, int vertex_limit) {
  if (g.vertex_count() > vertex_limit || g.vertex_count() > 64) {
    throw Error(ErrorCode::kSizeLimit,
                "cycle brute force limited to " + std::to_string(vertex_limit) +
                    " vertices");
  }
}

std::uint64_t vertex_mask(const Graph& g, const Cycle& c) {
  std::uint64_t mask = 0;
  for (EdgeId e : c.edges) {
    mask |= std::uint64_t{1} << g.edge(e).u;
    mask |= std::uint64_t{1} << g.edge(e).v;
  }
  return mask;
}

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const Graph& g) {
  std::vector<Cycle> out;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    std::vector<Vertex> path{s};
    std::vector<EdgeId> edges;
    on_path[static_cast<std::size_t>(s)] = 1;
    extend_path(g, s, path, edges, on_path, out);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  return out;
}

void for_each_cycle_set(const Graph& g,
                        const std::function<bool(const CycleSet&)>& visit,
                        int vertex_limit) {
  check_limit(g, vertex_limit);
  const int n = g.vertex_count();
  // Cycles grouped by their smallest vertex, which is where they start.
  std::vector<std::vector<std::pair<Cycle, std::uint64_t>>> by_start(
      static_cast<std::size_t>(n));
  for (Cycle& c : enumerate_simple_cycles(g)) {
    const Vertex s = cycle_vertices(g, c).front();
    const std::uint64_t mask = vertex_mask(g, c);
    by_start[static_cast<std::size_t>(s)].emplace_back(std::move(c), mask);
  }
  CycleSet current;
  bool stopped = false;
  // Decides vertices in increasing order: either v stays uncovered or a
  // cycle starting at v is added.
  std::function<void(Vertex, std::uint64_t)> rec = [&](Vertex v, std::uint64_t used) {
    while (v < n && (used >> v & 1)) ++v;
    if (v == n) {
      if (!visit(current)) stopped = true;
      return;
    }
    rec(v + 1, used);
    for (const auto& [cycle, mask] : by_start[static_cast<std::size_t>(v)]) {
      if (stopped) return;
      if (mask & used) continue;
      current.cycles.push_back(cycle);
      rec(v + 1, used | mask);
      current.cycles.pop_back();
    }
  };
  rec(0, 0);
}

std::set<Weight> cycle_set_weights(const WeightedInstance& inst, int vertex_limit) {
  std::set<Weight> out;
  for_each_cycle_set(
      inst.graph,
      [&](const CycleSet& cs) {
        out.insert(cycle_set_weight(inst.weights, cs));
        return true;
      },
      vertex_limit);
  return out;
}

std::optional<CycleSet> ecs_bruteforce(const WeightedInstance& inst,
                                       int vertex_limit) {
  std::optional<CycleSet> hit;
  for_each_cycle_set(
      inst.graph,
      [&](const CycleSet& cs) {
        if (cycle_set_weight(inst.weights, cs) != inst.target_k) return true;
        hit = cs;
        return false;
      },
      vertex_limit);
  return hit;
}

std::optional<Cycle> soc_bruteforce(const WeightedInstance& inst, int vertex_limit) {
  check_limit(inst.graph, vertex_limit);
  std::optional<Cycle> best;
  Weight best_weight = 0;
  for (Cycle& c : enumerate_simple_cycles(inst.graph)) {
    const Weight w = cycle_weight(inst.weights, c);
    if (w % 2 == 0) continue;
    if (!best || w < best_weight) {
      best = std::move(c);
      best_weight = w;
    }
  }
  if (best && best_weight <= inst.target_k) return best;
  return std::nullopt;
}

namespace {

CycleSolveOutcome passthrough(const SolveOutcome& outcome) {
  if (outcome.is_no()) return {CycleSolveOutcome::DefiniteNo{}};
  return {CycleSolveOutcome::BudgetExceeded{
      std::get<SolveOutcome::BudgetExceeded>(outcome.value).ranks_explored}};
}

}  // namespace

CycleSolveOutcome ecs_solve(const WeightedInstance& inst, int budget_l,
                            const SpmOptions& options) {
  const GadgetReduction reduced = reduce_ecs_to_ewpm(inst);
  const SolveOutcome outcome = ewpm_solve(reduced.instance, budget_l, options);
  if (!outcome.is_found()) return passthrough(outcome);
  CycleSet cycles =
      project_matching_to_cycles(outcome.found().result.matching, reduced.context);
  const Weight weight = cycle_set_weight(inst.weights, cycles);
  return {CycleSolveOutcome::Found{std::move(cycles), weight}};
}

CycleSolveOutcome soc_solve(const WeightedInstance& inst, int budget_l,
                            const SpmOptions& options) {
  const GadgetReduction reduced = reduce_soc_to_bcpm(inst);
  const SolveOutcome outcome = bcpm_solve(reduced.instance, budget_l, options);
  if (!outcome.is_found()) return passthrough(outcome);
  const CycleSet cycles =
      project_matching_to_cycles(outcome.found().result.matching, reduced.context);
  for (const Cycle& c : cycles.cycles) {
    const Weight w = cycle_weight(inst.weights, c);
    if (w % 2 != 0 && w <= inst.target_k) {
      return {CycleSolveOutcome::Found{CycleSet{{c}}, w}};
    }
  }
  throw Error(ErrorCode::kNonConservative,
              "odd cycle set without an odd member of weight <= k");
}

}  // namespace matchkit

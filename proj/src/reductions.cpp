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

#include "matchkit/reductions.hpp"

#include <algorithm>
#include <string>

namespace matchkit {
namespace {

struct Normalized {
  std::vector<Weight> weights;  // shifted to be non-negative
  Weight target = 0;            // shifted target
  Weight shift = 0;
};

// Every perfect matching has n/2 edges, so adding c to each weight adds
// c * n/2 to every matching weight and to the target alike.
Normalized normalize(const WeightedInstance& inst) {
  Normalized out;
  Weight lowest = 0;
  for (Weight w : inst.weights) lowest = std::min(lowest, w);
  out.shift = -lowest;
  out.weights.reserve(inst.weights.size());
  for (Weight w : inst.weights) out.weights.push_back(checked_add(w, out.shift));
  out.target = checked_add(
      inst.target_k,
      checked_mul(out.shift, static_cast<Weight>(inst.graph.vertex_count() / 2)));
  return out;
}

WeightedInstance alternating_instance(const WeightedInstance& inst,
                                      const Normalized& norm,
                                      const AlternatingContext& ctx,
                                      ProblemKind kind) {
  std::vector<char> in_base(static_cast<std::size_t>(inst.graph.edge_count()), 0);
  for (EdgeId e : ctx.base_matching.edges) in_base[static_cast<std::size_t>(e)] = 1;
  WeightedInstance out;
  out.graph = inst.graph;
  out.kind = kind;
  out.target_k = checked_sub(ctx.r, ctx.base_weight);
  out.weights.reserve(norm.weights.size());
  const Weight lift = checked_add(ctx.r, 1);
  for (std::size_t e = 0; e < norm.weights.size(); ++e) {
    const Weight magnitude = checked_add(norm.weights[e], lift);
    out.weights.push_back(in_base[e] ? -magnitude : magnitude);
  }
  return out;
}

AlternatingContext base_context(const WeightedInstance& inst,
                                const Normalized& norm, const PmResult& base) {
  AlternatingContext ctx;
  ctx.base_matching = base.matching;
  ctx.base_weight = base.weight;
  ctx.r = norm.target;
  ctx.shift = norm.shift;
  ctx.source = inst;
  return ctx;
}

}  // namespace

WeightedInstance canonical_no_instance(ProblemKind kind) {
  WeightedInstance inst;
  inst.graph = Graph(1);
  inst.kind = kind;
  inst.target_k = 1;
  return inst;
}

WeightedInstance canonical_yes_instance(ProblemKind kind) {
  WeightedInstance inst;
  inst.graph = Graph(3, {{0, 1}, {1, 2}, {0, 2}});
  inst.weights = {1, 1, 1};
  inst.kind = kind;
  inst.target_k = 3;
  return inst;
}

AlternatingReduction reduce_ewpm_to_ecs(const WeightedInstance& inst) {
  const Normalized norm = normalize(inst);
  AlternatingReduction out;
  const auto base = min_weight_pm(inst.graph, norm.weights);
  if (!base) {
    out.instance = canonical_no_instance(ProblemKind::kEcs);
    out.resolution = Resolution::kNo;
    return out;
  }
  out.context = base_context(inst, norm, *base);
  if (base->weight > norm.target) {
    out.instance = canonical_no_instance(ProblemKind::kEcs);
    out.resolution = Resolution::kNo;
    return out;
  }
  out.instance = alternating_instance(inst, norm, *out.context, ProblemKind::kEcs);
  return out;
}

AlternatingReduction reduce_bcpm_to_soc(const WeightedInstance& inst) {
  const Normalized norm = normalize(inst);
  AlternatingReduction out;
  const auto base = min_weight_pm(inst.graph, norm.weights);
  if (!base) {
    out.instance = canonical_no_instance(ProblemKind::kSoc);
    out.resolution = Resolution::kNo;
    return out;
  }
  out.context = base_context(inst, norm, *base);
  if (base->weight > norm.target) {
    out.instance = canonical_no_instance(ProblemKind::kSoc);
    out.resolution = Resolution::kNo;
    return out;
  }
  if (checked_sub(norm.target, base->weight) % 2 == 0) {
    out.instance = canonical_yes_instance(ProblemKind::kSoc);
    out.resolution = Resolution::kYes;
    return out;
  }
  out.instance = alternating_instance(inst, norm, *out.context, ProblemKind::kSoc);
  return out;
}

PmResult lift_cycles_to_matching(const CycleSet& cycles,
                                 const AlternatingContext& ctx) {
  const Graph& g = ctx.source.graph;
  check_cycle_set(g, cycles);
  std::vector<char> member(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : ctx.base_matching.edges) member[static_cast<std::size_t>(e)] = 1;
  for (const Cycle& c : cycles.cycles) {
    const std::size_t t = c.edges.size();
    bool alternates = t % 2 == 0;
    for (std::size_t i = 0; alternates && i < t; ++i) {
      alternates = member[static_cast<std::size_t>(c.edges[i])] !=
                   member[static_cast<std::size_t>(c.edges[(i + 1) % t])];
    }
    if (!alternates) {
      throw Error(ErrorCode::kNotAlternating,
                  "cycle does not alternate with the base matching");
    }
  }
  for (const Cycle& c : cycles.cycles) {
    for (EdgeId e : c.edges) member[static_cast<std::size_t>(e)] ^= 1;
  }
  PmResult out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (member[static_cast<std::size_t>(e)]) out.matching.edges.push_back(e);
  }
  out.weight = total_weight(ctx.source.weights, out.matching.edges);
  return out;
}

Gadget build_cycle_gadget(const Graph& g, std::span<const Weight> w) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  Gadget out;
  GadgetContext& ctx = out.context;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n + 7 * m));
  out.weights.assign(static_cast<std::size_t>(n + 7 * m), 0);
  for (Vertex v = 0; v < n; ++v) {
    ctx.vertex_map.push_back({2 * v, 2 * v + 1});
    ctx.canonical_matching.edges.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({2 * v, 2 * v + 1});
  }
  for (EdgeId e = 0; e < m; ++e) {
    const auto [u1, u2] = ctx.vertex_map[static_cast<std::size_t>(g.edge(e).u)];
    const auto [v1, v2] = ctx.vertex_map[static_cast<std::size_t>(g.edge(e).v)];
    const Vertex base = 2 * n + 4 * e;
    GadgetContext::EdgeChain chain{base, base + 1, base + 2, base + 3, 0};
    const EdgeId first = static_cast<EdgeId>(edges.size());
    edges.push_back({u1, chain.at_u});
    edges.push_back({u2, chain.at_u});
    edges.push_back({chain.at_u, chain.mid_u});
    edges.push_back({chain.mid_u, chain.mid_v});
    edges.push_back({chain.mid_v, chain.at_v});
    edges.push_back({chain.at_v, v1});
    edges.push_back({chain.at_v, v2});
    chain.middle = first + 3;
    out.weights[static_cast<std::size_t>(chain.middle)] = w[static_cast<std::size_t>(e)];
    ctx.canonical_matching.edges.push_back(first + 2);
    ctx.canonical_matching.edges.push_back(first + 4);
    ctx.edge_map.push_back(chain);
  }
  std::sort(ctx.canonical_matching.edges.begin(), ctx.canonical_matching.edges.end());
  out.graph = Graph(2 * n + 4 * m, std::move(edges));
  return out;
}

namespace {

GadgetReduction gadget_reduction(const WeightedInstance& inst, ProblemKind kind,
                                 Weight target) {
  Gadget gadget = build_cycle_gadget(inst.graph, inst.weights);
  GadgetReduction out;
  out.instance.graph = std::move(gadget.graph);
  out.instance.weights = std::move(gadget.weights);
  out.instance.kind = kind;
  out.instance.target_k = target;
  out.context = std::move(gadget.context);
  out.context.source = inst;
  return out;
}

}  // namespace

GadgetReduction reduce_ecs_to_ewpm(const WeightedInstance& inst) {
  return gadget_reduction(inst, ProblemKind::kEwpm, inst.target_k);
}

GadgetReduction reduce_soc_to_bcpm(const WeightedInstance& inst) {
  // An odd weight is at most k iff it is at most the largest odd value <= k.
  const Weight k = inst.target_k % 2 == 0 ? checked_sub(inst.target_k, 1)
                                          : inst.target_k;
  return gadget_reduction(inst, ProblemKind::kBcpm, k);
}

CycleSet project_matching_to_cycles(const Matching& m_star,
                                    const GadgetContext& ctx) {
  const Gadget gadget = build_cycle_gadget(ctx.source.graph, ctx.source.weights);
  if (gadget.context.canonical_matching != ctx.canonical_matching ||
      gadget.context.edge_map != ctx.edge_map ||
      gadget.context.vertex_map != ctx.vertex_map) {
    throw Error(ErrorCode::kContextMismatch,
                "gadget context does not match its source instance");
  }
  const Graph& g = gadget.graph;
  if (!verify_perfect_matching(g, gadget.weights, m_star)) {
    throw Error(ErrorCode::kNotPerfect, "not a perfect matching of the gadget");
  }

  std::vector<char> in_diff(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : ctx.canonical_matching.edges) in_diff[static_cast<std::size_t>(e)] ^= 1;
  for (EdgeId e : m_star.edges) in_diff[static_cast<std::size_t>(e)] ^= 1;

  std::vector<EdgeId> source_of(static_cast<std::size_t>(g.edge_count()), -1);
  for (EdgeId e = 0; e < static_cast<EdgeId>(ctx.edge_map.size()); ++e) {
    source_of[static_cast<std::size_t>(ctx.edge_map[static_cast<std::size_t>(e)].middle)] = e;
  }

  // Both matchings are perfect, so every vertex touched by the symmetric
  // difference meets exactly two of its edges.
  CycleSet out;
  std::vector<char> seen(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId start = 0; start < g.edge_count(); ++start) {
    if (!in_diff[static_cast<std::size_t>(start)] || seen[static_cast<std::size_t>(start)]) {
      continue;
    }
    Cycle cycle;
    EdgeId e = start;
    Vertex at = g.edge(start).u;
    while (!seen[static_cast<std::size_t>(e)]) {
      seen[static_cast<std::size_t>(e)] = 1;
      if (source_of[static_cast<std::size_t>(e)] >= 0) {
        cycle.edges.push_back(source_of[static_cast<std::size_t>(e)]);
      }
      at = g.other(e, at);
      for (EdgeId next : g.incident(at)) {
        if (next != e && in_diff[static_cast<std::size_t>(next)]) {
          e = next;
          break;
        }
      }
    }
    out.cycles.push_back(std::move(cycle));
  }
  check_cycle_set(ctx.source.graph, out);
  return out;
}

bool is_conservative(const Graph& g, std::span<const Weight> w) {
  if (g.edge_count() == 0) return true;
  const Gadget gadget = build_cycle_gadget(g, w);
  const auto best = min_weight_pm(gadget.graph, gadget.weights);
  return best && best->weight >= 0;
}

WeightedInstance soc_odd_weight_to_odd_length(const WeightedInstance& inst) {
  WeightedInstance out;
  out.kind = ProblemKind::kSoc;
  out.target_k = inst.target_k;
  std::vector<Edge> edges;
  int n = inst.graph.vertex_count();
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& ed = inst.graph.edge(e);
    const Weight w = inst.weights[static_cast<std::size_t>(e)];
    if (w % 2 != 0) {
      edges.push_back(ed);
      out.weights.push_back(w);
      continue;
    }
    const Vertex middle = n++;
    edges.push_back({ed.u, middle});
    out.weights.push_back(1);
    edges.push_back({middle, ed.v});
    out.weights.push_back(checked_sub(w, 1));
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

WeightedInstance soc_odd_length_to_odd_weight(const WeightedInstance& inst) {
  const Weight n = inst.graph.vertex_count();
  const Weight scale = checked_mul(2, n);
  WeightedInstance out;
  out.graph = inst.graph;
  out.kind = ProblemKind::kSoc;
  out.weights.reserve(inst.weights.size());
  for (Weight w : inst.weights) {
    out.weights.push_back(checked_add(checked_mul(scale, w), 1));
  }
  out.target_k = checked_add(checked_mul(scale, inst.target_k), n);
  return out;
}

}  // namespace matchkit

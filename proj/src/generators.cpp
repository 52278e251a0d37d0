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

#include "matchkit/generators.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "matchkit/pm_solver.hpp"
#include "matchkit/reductions.hpp"

namespace matchkit {
namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

void check_args(int n, WeightRange range) {
  if (n < 1) throw Error(ErrorCode::kMalformed, "vertex count must be positive");
  if (range.lo > range.hi) throw Error(ErrorCode::kMalformed, "empty weight range");
}

std::vector<Weight> draw_weights(std::mt19937_64& rng, std::size_t m, WeightRange range) {
  std::uniform_int_distribution<Weight> dist(range.lo, range.hi);
  std::vector<Weight> w(m);
  for (Weight& x : w) x = dist(rng);
  return w;
}

std::vector<Weight> negated(std::span<const Weight> w) {
  std::vector<Weight> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = checked_sub(0, w[i]);
  return out;
}

void make_conservative(std::mt19937_64& rng, const Graph& g, std::vector<Weight>& w,
                       WeightRange range) {
  for (int attempt = 0; attempt < 64 && !is_conservative(g, w); ++attempt) {
    w = draw_weights(rng, w.size(), range);
  }
  while (!is_conservative(g, w)) {
    auto lowest = std::min_element(w.begin(), w.end());
    *lowest = 0;
  }
}

Weight draw_target(std::mt19937_64& rng, const WeightedInstance& inst, WeightRange range) {
  Weight lo = 0;
  Weight hi = 0;
  if (is_cycle_kind(inst.kind)) {
    const Gadget gadget = build_cycle_gadget(inst.graph, inst.weights);
    const auto max_pm = min_weight_pm(gadget.graph, negated(gadget.weights));
    hi = checked_sub(0, max_pm->weight);
  } else if (const auto min_pm = min_weight_pm(inst.graph, inst.weights)) {
    lo = min_pm->weight;
    hi = checked_sub(0, min_weight_pm(inst.graph, negated(inst.weights))->weight);
  } else {
    const Weight half = inst.graph.vertex_count() / 2;
    lo = checked_mul(half, range.lo);
    hi = checked_mul(half, range.hi);
  }
  return std::uniform_int_distribution<Weight>(lo, hi)(rng);
}

WeightedInstance finish(std::mt19937_64& rng, int n, std::vector<Edge> edges, WeightRange range,
                        ProblemKind kind) {
  WeightedInstance inst;
  inst.kind = kind;
  inst.graph = Graph(n, std::move(edges));
  inst.weights = draw_weights(rng, static_cast<std::size_t>(inst.graph.edge_count()), range);
  if (is_cycle_kind(kind)) make_conservative(rng, inst.graph, inst.weights, range);
  if (kind == ProblemKind::kSpm) inst.rank_l = std::uniform_int_distribution<int>(1, 4)(rng);
  inst.target_k = draw_target(rng, inst, range);
  validate_instance(inst);
  return inst;
}

}  // namespace

WeightedInstance gen_random_instance(int n, double edge_prob, WeightRange range,
                                     ProblemKind kind, std::uint64_t seed) {
  check_args(n, range);
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorCode::kMalformed, "edge probability outside [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  std::vector<Edge> edges;
  for (const Edge& e : all_pairs(n)) {
    if (coin(rng)) edges.push_back(e);
  }
  return finish(rng, n, std::move(edges), range, kind);
}

WeightedInstance gen_random_instance_m(int n, int edge_count, WeightRange range,
                                       ProblemKind kind, std::uint64_t seed) {
  check_args(n, range);
  std::vector<Edge> pairs = all_pairs(n);
  if (edge_count < 0 || static_cast<std::size_t>(edge_count) > pairs.size()) {
    throw Error(ErrorCode::kMalformed, "edge count must be in [0, " +
                                           std::to_string(pairs.size()) + "]");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Partial Fisher-Yates: the first edge_count slots are a uniform subset.
  for (std::size_t i = 0; i < static_cast<std::size_t>(edge_count); ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
    std::swap(order[i], order[pick(rng)]);
  }
  order.resize(static_cast<std::size_t>(edge_count));
  std::sort(order.begin(), order.end());
  std::vector<Edge> edges;
  for (std::size_t i : order) edges.push_back(pairs[i]);
  return finish(rng, n, std::move(edges), range, kind);
}

const TightnessWitness& general_tightness_witness() {
  // Triangular prism: triangles {1,2,3} and {4,5,6}, unit weight on the
  // three rungs 1-4, 2-5, 3-6.
  static const TightnessWitness witness{
      6,
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
      {0, 0, 1, 0, 1, 1, 0, 0, 0},
  };
  return witness;
}

WeightedInstance gen_tightness_family(int l, TightnessSide side) {
  if (l < 2) throw Error(ErrorCode::kMalformed, "tightness family needs l >= 2");
  TightnessWitness unit;
  Weight step_base = 0;
  Weight step = 0;
  if (side == TightnessSide::kBipartite) {
    unit = {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0, 1, 0, 1}};
    step_base = 0;
    step = 2;
  } else {
    unit = general_tightness_witness();
    step_base = 1;
    step = 2;
  }
  const int copies = l - 1;
  std::vector<Edge> edges;
  WeightedInstance inst;
  for (int c = 0; c < copies; ++c) {
    const Vertex offset = c * unit.vertex_count;
    for (const Edge& e : unit.edges) edges.push_back({e.u + offset, e.v + offset});
    inst.weights.insert(inst.weights.end(), unit.weights.begin(), unit.weights.end());
  }
  inst.graph = Graph(copies * unit.vertex_count, std::move(edges));
  inst.kind = ProblemKind::kSpm;
  inst.rank_l = l;
  // Each copy contributes step_base or step_base + step; the l-th smallest
  // total has every copy at its heavier matching.
  inst.target_k = static_cast<Weight>(copies) * (step_base + step);
  return inst;
}

std::optional<TightnessWitness> search_tightness_witness(int max_vertices) {
  for (int n = 4; n <= max_vertices; n += 2) {
    const std::vector<Edge> pairs = all_pairs(n);
    const int p = static_cast<int>(pairs.size());
    for (int m = 1; m <= p; ++m) {
      std::vector<int> pick(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        std::vector<Edge> edges;
        for (int i : pick) edges.push_back(pairs[static_cast<std::size_t>(i)]);
        const Graph g(n, edges);
        std::vector<std::uint64_t> pms;
        for_each_perfect_matching(g, [&](const Matching& mm) {
          std::uint64_t mask = 0;
          for (EdgeId e : mm.edges) mask |= std::uint64_t{1} << e;
          pms.push_back(mask);
        });
        std::uint64_t covered = 0;
        for (std::uint64_t mask : pms) covered |= mask;
        const bool candidate = pms.size() >= 2 &&
                               covered == (m == 64 ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << m) - 1) &&
                               !is_bipartite(g);
        if (candidate) {
          std::vector<Weight> w(static_cast<std::size_t>(m), 0);
          std::vector<Weight> sums(pms.size(), 0);
          const auto accept = [&]() {
            bool has1 = false;
            bool has3 = false;
            for (Weight s : sums) {
              if (s == 1) {
                has1 = true;
              } else if (s == 3) {
                has3 = true;
              } else {
                return false;
              }
            }
            if (!has1 || !has3) return false;
            for (int e = 0; e < m; ++e) {
              Weight best = 4;
              for (std::size_t j = 0; j < pms.size(); ++j) {
                if (pms[j] >> e & 1) best = std::min(best, sums[j]);
              }
              if (best != 1) return false;
            }
            for (int e = 0; e < m; ++e) {
              for (int f = e + 1; f < m; ++f) {
                const std::uint64_t both = (std::uint64_t{1} << e) | (std::uint64_t{1} << f);
                Weight best = 4;
                for (std::size_t j = 0; j < pms.size(); ++j) {
                  if ((pms[j] & both) == both) best = std::min(best, sums[j]);
                }
                if (best == 3) return true;
              }
            }
            return false;
          };
          // Lexicographic DFS over {0..3}^m; sums only grow, so a partial
          // sum above 3 prunes the subtree without changing the first hit.
          std::function<bool(int)> assign = [&](int i) {
            if (i == m) return accept();
            for (Weight x = 0; x <= 3; ++x) {
              w[static_cast<std::size_t>(i)] = x;
              bool feasible = true;
              for (std::size_t j = 0; j < pms.size(); ++j) {
                if (pms[j] >> i & 1) {
                  sums[j] += x;
                  if (sums[j] > 3) feasible = false;
                }
              }
              const bool hit = feasible && assign(i + 1);
              for (std::size_t j = 0; j < pms.size(); ++j) {
                if (pms[j] >> i & 1) sums[j] -= x;
              }
              if (hit) return true;
            }
            return false;
          };
          if (assign(0)) return TightnessWitness{n, edges, w};
        }
        // Next combination in lexicographic order.
        int i = m - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == p - m + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j) {
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace matchkit

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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "matchkit/cycle_oracles.hpp"
#include "matchkit/generators.hpp"
#include "matchkit/pm_solver.hpp"
#include "matchkit/reductions.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/suites.hpp"

using namespace matchkit;
using fixtures::error_of;

TEST_CASE("exact-weight matching to exact cycle sum: four-cycle") {
  const WeightedInstance src = fixtures::four_cycle("ewpm", 2);
  const AlternatingReduction red = reduce_ewpm_to_ecs(src);
  REQUIRE(red.resolution == Resolution::kNone);
  REQUIRE(red.context.has_value());
  CHECK(red.instance.kind == ProblemKind::kEcs);
  CHECK(red.instance.weights == std::vector<Weight>{-3, 4, -3, 4});
  CHECK(red.instance.target_k == 2);
  CHECK(red.context->base_matching.edges == std::vector<EdgeId>{0, 2});
  CHECK(red.context->r == 2);
  const auto cycles = oracle::all_cycles(red.instance);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].weight == 2);
  CHECK(is_conservative(red.instance.graph, red.instance.weights));
}

TEST_CASE("exact-weight matching: resolved shortcuts") {
  const auto tri = reduce_ewpm_to_ecs(fixtures::triangle("ewpm", 5));
  CHECK(tri.resolution == Resolution::kNo);
  CHECK_FALSE(tri.context.has_value());
  const auto canon = canonical_no_instance(ProblemKind::kEcs);
  CHECK(tri.instance.graph.vertex_count() == canon.graph.vertex_count());
  CHECK(tri.instance.target_k == 1);
  CHECK_FALSE(oracle::ecs_answer(tri.instance));

  const auto heavy = reduce_ewpm_to_ecs(fixtures::single_edge("ewpm", 5, 3));
  CHECK(heavy.resolution == Resolution::kNo);
}

TEST_CASE("parity-bounded matching to short odd cycle") {
  const auto yes = reduce_bcpm_to_soc(fixtures::four_cycle("bcpm", 4));
  CHECK(yes.resolution == Resolution::kYes);
  CHECK(oracle::soc_answer(yes.instance));
  const auto canon = canonical_yes_instance(ProblemKind::kSoc);
  CHECK(canon.graph.vertex_count() == 3);
  CHECK(canon.target_k == 3);

  const auto edge = reduce_bcpm_to_soc(fixtures::single_edge("bcpm", 1, 4));
  REQUIRE(edge.resolution == Resolution::kNone);
  CHECK(edge.instance.kind == ProblemKind::kSoc);
  CHECK(edge.instance.graph.edge_count() == 1);
  CHECK(edge.instance.target_k == 3);
  CHECK_FALSE(oracle::soc_answer(edge.instance));

  CHECK(reduce_bcpm_to_soc(fixtures::triangle("bcpm", 1)).resolution == Resolution::kNo);
  // Parity matches at the minimum but it is too heavy.
  CHECK(reduce_bcpm_to_soc(fixtures::single_edge("bcpm", 6, 2)).resolution == Resolution::kNo);
}

TEST_CASE("lifting cycles back to matchings") {
  const WeightedInstance src = fixtures::four_cycle("ewpm", 2);
  const AlternatingReduction red = reduce_ewpm_to_ecs(src);
  const AlternatingContext& ctx = *red.context;

  const PmResult same = lift_cycles_to_matching(CycleSet{}, ctx);
  CHECK(same.matching == ctx.base_matching);
  CHECK(same.weight == 0);

  const Cycle square{{0, 1, 2, 3}};
  const PmResult flipped = lift_cycles_to_matching(CycleSet{{square}}, ctx);
  CHECK(flipped.matching.edges == std::vector<EdgeId>{1, 3});
  CHECK(flipped.weight == 2);
  CHECK(verify_perfect_matching(src.graph, src.weights, flipped.matching) == Weight{2});

  const WeightedInstance k4 = fixtures::weighted_k4("ewpm", 7);
  const AlternatingReduction k4red = reduce_ewpm_to_ecs(k4);
  REQUIRE(k4red.context.has_value());
  const Cycle tri = cycle_from_vertices(k4.graph, std::vector<Vertex>{0, 1, 2});
  CHECK(error_of([&] { lift_cycles_to_matching(CycleSet{{tri}}, *k4red.context); }) ==
        ErrorCode::kNotAlternating);
  const Cycle sq1 = cycle_from_vertices(k4.graph, std::vector<Vertex>{0, 1, 3, 2});
  const Cycle sq2 = cycle_from_vertices(k4.graph, std::vector<Vertex>{0, 2, 1, 3});
  CHECK(error_of([&] { lift_cycles_to_matching(CycleSet{{sq1, sq2}}, *k4red.context); })
            .has_value());
}

TEST_CASE("cycle gadget: small cases") {
  const GadgetReduction one = reduce_ecs_to_ewpm(fixtures::single_edge("ecs", 2, 0));
  CHECK(one.instance.graph.vertex_count() == 8);
  CHECK(one.instance.graph.edge_count() == 9);
  CHECK(enumerate_perfect_matchings(one.instance.graph) ==
        std::vector<Matching>{one.context.canonical_matching});

  const GadgetReduction tri = reduce_ecs_to_ewpm(fixtures::triangle("ecs", 3));
  CHECK(tri.instance.kind == ProblemKind::kEwpm);
  CHECK(tri.instance.graph.vertex_count() == 18);
  CHECK(tri.instance.graph.edge_count() == 24);
  CHECK(tri.instance.target_k == 3);
  CHECK(oracle::distinct_pm_weights(tri.instance) == std::vector<Weight>{0, 3});

  const GadgetReduction bare = reduce_ecs_to_ewpm(parse_instance("p ecs 2 0 0\n"));
  CHECK(bare.instance.graph.vertex_count() == 4);
  CHECK(oracle::distinct_pm_weights(bare.instance) == std::vector<Weight>{0});
  CHECK(oracle::ewpm_answer(bare.instance));
}

TEST_CASE("short odd cycle to parity-bounded matching") {
  const GadgetReduction three = reduce_soc_to_bcpm(fixtures::triangle("soc", 3));
  CHECK(three.instance.kind == ProblemKind::kBcpm);
  CHECK(three.instance.target_k == 3);
  CHECK(oracle::bcpm_answer(three.instance));
  CHECK(reduce_soc_to_bcpm(fixtures::triangle("soc", 4)).instance.target_k == 3);
  const GadgetReduction low = reduce_soc_to_bcpm(fixtures::triangle("soc", 1));
  CHECK(low.instance.target_k == 1);
  CHECK_FALSE(oracle::bcpm_answer(low.instance));
}

TEST_CASE("projecting gadget matchings to cycles") {
  const WeightedInstance src = fixtures::triangle("ecs", 3);
  const GadgetReduction red = reduce_ecs_to_ewpm(src);
  CHECK(project_matching_to_cycles(red.context.canonical_matching, red.context).cycles.empty());
  for (const auto& pm : oracle::all_pms(red.instance)) {
    if (pm.weight != 3) continue;
    const CycleSet cs = project_matching_to_cycles(Matching{pm.edges}, red.context);
    REQUIRE(cs.cycles.size() == 1);
    CHECK(cycle_set_weight(src.weights, cs) == 3);
    CHECK(cs.cycles[0].edges.size() == 3);
  }
  const WeightedInstance two = parse_instance(
      "p ecs 6 6 6\ne 1 2 1\ne 2 3 1\ne 1 3 1\ne 4 5 1\ne 5 6 1\ne 4 6 1\n");
  const GadgetReduction red2 = reduce_ecs_to_ewpm(two);
  int flipped_both = 0;
  for (const auto& pm : oracle::all_pms(red2.instance)) {
    if (pm.weight != 6) continue;
    const CycleSet cs = project_matching_to_cycles(Matching{pm.edges}, red2.context);
    CHECK(cs.cycles.size() == 2);
    CHECK_NOTHROW(check_cycle_set(two.graph, cs));
    ++flipped_both;
  }
  // Each gadget vertex pair can be matched either way, so several gadget
  // matchings project to the same pair of triangles.
  CHECK(flipped_both > 0);
  CHECK(error_of([&] { project_matching_to_cycles(Matching{{0}}, red.context); }) ==
        ErrorCode::kNotPerfect);
}

TEST_CASE("conservativeness: small cases") {
  const auto ones = fixtures::triangle("ewpm", 0);
  CHECK(is_conservative(ones.graph, ones.weights));
  const auto neg = fixtures::triangle("ewpm", 0, 1, 1, -3);
  CHECK_FALSE(is_conservative(neg.graph, neg.weights));
  const auto sq = fixtures::four_cycle();
  CHECK(is_conservative(sq.graph, std::vector<Weight>{-3, 4, -3, 4}));
  // A negative edge outside every cycle is harmless.
  CHECK(is_conservative(Graph(2, {{0, 1}}), std::vector<Weight>{-10}));
}

TEST_CASE("odd weight to odd length") {
  const auto four = soc_odd_weight_to_odd_length(fixtures::single_edge("soc", 4, 5));
  CHECK(four.graph.vertex_count() == 3);
  CHECK(four.weights == std::vector<Weight>{1, 3});
  const auto three = soc_odd_weight_to_odd_length(fixtures::single_edge("soc", 3, 5));
  CHECK(three.weights == std::vector<Weight>{3});
  const auto zero = soc_odd_weight_to_odd_length(fixtures::single_edge("soc", 0, 5));
  CHECK(zero.weights == std::vector<Weight>{1, -1});
}

TEST_CASE("odd length to odd weight") {
  const auto sq = soc_odd_length_to_odd_weight(
      parse_instance("p soc 4 4 1\ne 1 2 2\ne 2 3 0\ne 3 4 0\ne 4 1 0\n"));
  CHECK(sq.weights == std::vector<Weight>{17, 1, 1, 1});
  CHECK(sq.target_k == 2 * 4 * 1 + 4);
  const auto tri = soc_odd_length_to_odd_weight(fixtures::triangle("soc", 3));
  CHECK(tri.weights == std::vector<Weight>{7, 7, 7});
  CHECK(oracle::all_cycles(tri)[0].weight == 21);
}

// Every cycle keeps its weight, and parity of weight becomes parity of
// length; the two encodings compose to an equivalent instance.
TEST_CASE("odd-cycle encodings preserve answers") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const WeightedInstance src = suites::cycle_source(ProblemKind::kSoc, seed);
    const WeightedInstance split = soc_odd_weight_to_odd_length(src);
    CHECK(std::all_of(split.weights.begin(), split.weights.end(),
                      [](Weight w) { return w % 2 != 0; }));
    CHECK(oracle::cycle_set_weights(oracle::all_cycles(split)) ==
          oracle::cycle_set_weights(oracle::all_cycles(src)));
    for (const auto& c : oracle::all_cycles(split)) {
      CHECK((c.weight % 2 != 0) == (c.edges.size() % 2 != 0));
    }
    CHECK(oracle::soc_answer(split) == oracle::soc_answer(src));
    if (split.graph.vertex_count() <= 9) {
      CHECK(oracle::soc_answer(soc_odd_length_to_odd_weight(split)) == oracle::soc_answer(src));
    }
  }
}

TEST_CASE("alternating transform invariants on random inputs") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const ProblemKind kind = seed % 2 ? ProblemKind::kEwpm : ProblemKind::kBcpm;
    const WeightedInstance src = suites::matching_source(kind, seed);
    const AlternatingReduction red =
        kind == ProblemKind::kEwpm ? reduce_ewpm_to_ecs(src) : reduce_bcpm_to_soc(src);
    CHECK(is_conservative(red.instance.graph, red.instance.weights));
    CHECK_NOTHROW(validate_instance(red.instance));
    const bool want = kind == ProblemKind::kEwpm ? oracle::ewpm_answer(src) : oracle::bcpm_answer(src);
    const bool got = kind == ProblemKind::kEwpm ? oracle::ecs_answer(red.instance)
                                                : oracle::soc_answer(red.instance);
    CHECK(want == got);
    if (red.resolution != Resolution::kNone) continue;
    // Lifting every cycle set that fits under r - w(M) gives a perfect
    // matching of the matching weight.
    const auto& ctx = *red.context;
    const auto cycles = oracle::all_cycles(red.instance);
    for (const auto& c : cycles) {
      if (c.weight > ctx.r - ctx.base_weight) continue;
      Cycle cyc{c.edges};
      const PmResult lifted = lift_cycles_to_matching(CycleSet{{cyc}}, ctx);
      CHECK(verify_perfect_matching(src.graph, src.weights, lifted.matching) == lifted.weight);
      CHECK(lifted.weight == total_weight(src.weights, ctx.base_matching.edges) + c.weight);
    }
  }
}

TEST_CASE("gadget invariants on random inputs") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const ProblemKind kind = seed % 2 ? ProblemKind::kEcs : ProblemKind::kSoc;
    const WeightedInstance src = suites::cycle_source(kind, seed);
    const GadgetReduction red =
        kind == ProblemKind::kEcs ? reduce_ecs_to_ewpm(src) : reduce_soc_to_bcpm(src);
    const int v = src.graph.vertex_count();
    const int m = src.graph.edge_count();
    CHECK(red.instance.graph.vertex_count() == 2 * v + 4 * m);
    CHECK(red.instance.graph.edge_count() == v + 7 * m);
    CHECK(verify_perfect_matching(red.instance.graph, red.instance.weights,
                                  red.context.canonical_matching) == Weight{0});
    if (m > 0) {
      CHECK(*std::max_element(red.instance.weights.begin(), red.instance.weights.end()) ==
            std::max<Weight>(0, *std::max_element(src.weights.begin(), src.weights.end())));
    }
    // Gadget matching weights are exactly the cycle-set weights.
    if (red.instance.graph.vertex_count() <= 26) {
      const auto pm = oracle::distinct_pm_weights(red.instance);
      const auto sums = oracle::cycle_set_weights(oracle::all_cycles(src));
      CHECK(std::set<Weight>(pm.begin(), pm.end()) == sums);
    }
  }
}

TEST_CASE("conservativeness agrees with negative-cycle search") {
  for (std::uint64_t seed = 1; seed <= 250; ++seed) {
    const auto inst = gen_random_instance(3 + static_cast<int>(seed % 6), 0.5, {-5, 5},
                                          ProblemKind::kEwpm, seed);
    CHECK(is_conservative(inst.graph, inst.weights) ==
          !oracle::has_negative_cycle(oracle::all_cycles(inst)));
  }
}

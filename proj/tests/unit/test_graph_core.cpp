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
#include <string>

#include "doctest.h"
#include "matchkit/generators.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/instance_io.hpp"
#include "matchkit/reductions.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace matchkit;
using fixtures::error_of;

TEST_CASE("parse: smallest file") {
  const WeightedInstance inst = parse_instance("p ewpm 2 1 7\ne 1 2 7");
  CHECK(inst.kind == ProblemKind::kEwpm);
  CHECK(inst.target_k == 7);
  CHECK(inst.graph.vertex_count() == 2);
  REQUIRE(inst.graph.edge_count() == 1);
  CHECK(inst.graph.edge(0) == Edge{0, 1});
  CHECK(inst.weights == std::vector<Weight>{7});
  CHECK_FALSE(inst.rank_l.has_value());
}

TEST_CASE("parse: four-cycle rank instance") {
  const WeightedInstance inst = fixtures::four_cycle("spm", 2);
  CHECK(inst.kind == ProblemKind::kSpm);
  CHECK(inst.rank_l == 2);
  CHECK(inst.target_k == 2);
  CHECK(inst.weights == std::vector<Weight>{0, 1, 0, 1});
  CHECK(inst.graph.edge(1) == Edge{1, 2});
}

TEST_CASE("parse: rejected inputs carry distinct codes") {
  CHECK(error_of([] { parse_instance("p ewpm 2 1 0\ne 1 1 0"); }) == ErrorCode::kNonSimple);
  CHECK(error_of([] { parse_instance("p ewpm 3 2 0\ne 1 2 0\ne 2 1 0"); }) ==
        ErrorCode::kNonSimple);
  CHECK(error_of([] { parse_instance("e 1 2 0"); }) == ErrorCode::kMissingProblemLine);
  CHECK(error_of([] { parse_instance("p ewpm 2 1 0\ne 1 3 0"); }) == ErrorCode::kBadId);
  CHECK(error_of([] { parse_instance("p ewpm 2 2 0\ne 1 2 0"); }) ==
        ErrorCode::kEdgeCountMismatch);
  CHECK(error_of([] { parse_instance("p ewpm 2 1 0\ne 1 2 9223372036854775808"); }) ==
        ErrorCode::kWeightOverflow);
  CHECK(error_of([] { parse_instance("p ewpm 2 1 0\ne 1 2 4611686018427387903"); }) ==
        ErrorCode::kWeightOverflow);
  CHECK(error_of([] { parse_instance("p spm 2 1 0\ne 1 2 0"); }) == ErrorCode::kMissingRank);
  CHECK(error_of([] { parse_instance("p ewpm 2 1 0\ne 1 2 x"); }) == ErrorCode::kMalformed);
  CHECK(error_of([] { parse_instance("p nope 2 1 0\ne 1 2 0"); }) == ErrorCode::kMalformed);
  CHECK(error_of([] { parse_instance("p ecs 3 3 0\ne 1 2 1\ne 2 3 1\ne 1 3 -3"); }) ==
        ErrorCode::kNonConservative);
}

TEST_CASE("parse: comments and blank lines are ignored") {
  const WeightedInstance inst = parse_instance("c hello\n\np ewpm 2 1 7\nc mid\ne 1 2 7\n");
  CHECK(inst.graph.edge_count() == 1);
}

TEST_CASE("serialize: exact text of small instances") {
  CHECK(serialize_instance(parse_instance("p ewpm 2 1 7\ne 1 2 7")) == "p ewpm 2 1 7\ne 1 2 7\n");
  CHECK(serialize_instance(fixtures::four_cycle("spm", 2)) ==
        "p spm 4 4 2 2\ne 1 2 0\ne 2 3 1\ne 3 4 0\ne 4 1 1\n");
  CHECK(serialize_instance(parse_instance("p ewpm 2 1 0\ne 1 2 -3")).find("e 1 2 -3\n") !=
        std::string::npos);
}

TEST_CASE("serialize then parse is the identity") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    static constexpr ProblemKind kKinds[] = {ProblemKind::kEwpm, ProblemKind::kBcpm,
                                             ProblemKind::kEcs, ProblemKind::kSoc,
                                             ProblemKind::kSpm};
    const ProblemKind kind = kKinds[seed % 5];
    const WeightedInstance inst =
        gen_random_instance(1 + static_cast<int>(seed % 9), 0.5, {-6, 6}, kind, seed);
    const WeightedInstance back = parse_instance(serialize_instance(inst));
    CHECK(back.kind == inst.kind);
    CHECK(back.target_k == inst.target_k);
    CHECK(back.rank_l == inst.rank_l);
    CHECK(back.weights == inst.weights);
    CHECK(back.graph.vertex_count() == inst.graph.vertex_count());
    CHECK(std::vector<Edge>(back.graph.edges().begin(), back.graph.edges().end()) ==
          std::vector<Edge>(inst.graph.edges().begin(), inst.graph.edges().end()));
  }
}

TEST_CASE("validate: conservativeness only for cycle kinds") {
  CHECK_NOTHROW(validate_instance(fixtures::triangle("ecs", 0)));
  WeightedInstance bad = fixtures::triangle("ewpm", 0, 1, 1, -3);
  CHECK_NOTHROW(validate_instance(bad));
  bad.kind = ProblemKind::kEcs;
  CHECK(error_of([&] { validate_instance(bad); }) == ErrorCode::kNonConservative);
  WeightedInstance spm = fixtures::four_cycle();
  spm.kind = ProblemKind::kSpm;
  CHECK(error_of([&] { validate_instance(spm); }) == ErrorCode::kMissingRank);
  WeightedInstance short_weights = fixtures::four_cycle();
  short_weights.weights.pop_back();
  CHECK(error_of([&] { validate_instance(short_weights); }).has_value());
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(fixtures::four_cycle().graph));
  CHECK_FALSE(is_bipartite(fixtures::triangle("ewpm", 0).graph));
  const Graph both(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {4, 6}});
  CHECK_FALSE(is_bipartite(both));
  const WeightedInstance sq = fixtures::four_cycle();
  const auto colors = two_coloring(sq.graph);
  REQUIRE(colors.has_value());
  for (const Edge& e : sq.graph.edges()) {
    CHECK((*colors)[static_cast<std::size_t>(e.u)] != (*colors)[static_cast<std::size_t>(e.v)]);
  }
}

TEST_CASE("bipartiteness agrees with odd-cycle search") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const WeightedInstance inst = gen_random_instance(2 + static_cast<int>(seed % 7), 0.3, {0, 0},
                                                      ProblemKind::kEwpm, seed);
    bool odd = false;
    for (const auto& c : oracle::all_cycles(inst)) odd = odd || c.edges.size() % 2 == 1;
    CHECK(is_bipartite(inst.graph) == !odd);
  }
}

TEST_CASE("checked arithmetic") {
  const Weight max = std::numeric_limits<Weight>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK(error_of([&] { checked_add(max, 1); }) == ErrorCode::kWeightOverflow);
  CHECK(error_of([&] { checked_sub(-max, 2); }) == ErrorCode::kWeightOverflow);
  CHECK(error_of([&] { checked_mul(max, 2); }) == ErrorCode::kWeightOverflow);
}

TEST_CASE("random generator") {
  const auto a = gen_random_instance(6, 0.5, {0, 8}, ProblemKind::kEwpm, 1);
  const auto b = gen_random_instance(6, 0.5, {0, 8}, ProblemKind::kEwpm, 1);
  CHECK(serialize_instance(a) == serialize_instance(b));

  const auto k4 = gen_random_instance(4, 1.0, {0, 0}, ProblemKind::kEwpm, 7);
  CHECK(k4.graph.edge_count() == 6);
  CHECK(k4.weights == std::vector<Weight>(6, 0));

  const auto ecs = gen_random_instance(6, 0.6, {-5, 5}, ProblemKind::kEcs, 3);
  CHECK_NOTHROW(validate_instance(ecs));
  CHECK_FALSE(oracle::has_negative_cycle(oracle::all_cycles(ecs)));

  CHECK(error_of([] { gen_random_instance(4, 0.5, {3, 2}, ProblemKind::kEwpm, 1); }) ==
        ErrorCode::kMalformed);
  CHECK(error_of([] { gen_random_instance(0, 0.5, {0, 2}, ProblemKind::kEwpm, 1); }).has_value());
  CHECK(error_of([] { gen_random_instance_m(2, 4, {0, 2}, ProblemKind::kEwpm, 1); }).has_value());
}

TEST_CASE("random generator: cycle kinds are conservative, targets achievable") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const ProblemKind kind = seed % 2 ? ProblemKind::kSoc : ProblemKind::kEcs;
    const auto inst = gen_random_instance(3 + static_cast<int>(seed % 6), 0.5, {-5, 5}, kind, seed);
    const auto cycles = oracle::all_cycles(inst);
    CHECK_FALSE(oracle::has_negative_cycle(cycles));
    const auto sums = oracle::cycle_set_weights(cycles);
    CHECK(inst.target_k >= *sums.begin());
    CHECK(inst.target_k <= *sums.rbegin());
  }
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const int n = 2 + 2 * static_cast<int>(seed % 4);
    const int m = std::min(2 + static_cast<int>(seed % 9), n * (n - 1) / 2);
    const auto inst = gen_random_instance_m(n, m, {-5, 5}, ProblemKind::kSpm, seed);
    CHECK(inst.graph.edge_count() == m);
    REQUIRE(inst.rank_l.has_value());
    CHECK(*inst.rank_l >= 1);
    const auto weights = oracle::distinct_pm_weights(inst);
    if (!weights.empty()) {
      CHECK(inst.target_k >= weights.front());
      CHECK(inst.target_k <= weights.back());
    }
  }
}

TEST_CASE("tightness family: bipartite side") {
  const auto two = gen_tightness_family(2, TightnessSide::kBipartite);
  CHECK(two.graph.vertex_count() == 4);
  CHECK(two.graph.edge_count() == 4);
  CHECK(oracle::distinct_pm_weights(two) == std::vector<Weight>{0, 2});
  for (int l = 3; l <= 4; ++l) {
    const auto inst = gen_tightness_family(l, TightnessSide::kBipartite);
    std::vector<Weight> want;
    for (int j = 0; j < l; ++j) want.push_back(2 * j);
    CHECK(oracle::distinct_pm_weights(inst) == want);
    CHECK(is_bipartite(inst.graph));
    CHECK(inst.rank_l == l);
  }
  CHECK(error_of([] { gen_tightness_family(1, TightnessSide::kBipartite); }).has_value());
}

// The l-th smallest weight is out of reach of every forced set smaller than
// 2(l-1) edges.
TEST_CASE("tightness family: general side needs large forced sets") {
  const auto two = gen_tightness_family(2, TightnessSide::kGeneral);
  CHECK(oracle::distinct_pm_weights(two) == std::vector<Weight>{1, 3});
  CHECK_FALSE(is_bipartite(two.graph));
  for (int l = 2; l <= 3; ++l) {
    const auto inst = gen_tightness_family(l, TightnessSide::kGeneral);
    const auto pms = oracle::all_pms(inst);
    const auto weights = oracle::distinct_pm_weights(inst);
    REQUIRE(weights.size() >= static_cast<std::size_t>(l));
    const Weight target = weights[static_cast<std::size_t>(l - 1)];
    CHECK(inst.target_k == target);
    const int m = inst.graph.edge_count();
    const int limit = 2 * (l - 1) - 1;
    // Every edge set of at most `limit` edges.
    std::vector<int> chosen;
    bool reached = false;
    std::function<void(int)> rec = [&](int from) {
      if (!chosen.empty() && oracle::forced_min(pms, chosen) == target) reached = true;
      if (static_cast<int>(chosen.size()) == limit) return;
      for (int e = from; e < m; ++e) {
        chosen.push_back(e);
        rec(e + 1);
        chosen.pop_back();
      }
    };
    rec(0);
    CHECK_FALSE(reached);
  }
}

TEST_CASE("tightness witness search reproduces the embedded graph") {
  const auto found = search_tightness_witness();
  REQUIRE(found.has_value());
  CHECK(*found == general_tightness_witness());
  CHECK(general_tightness_witness().vertex_count == 6);
}

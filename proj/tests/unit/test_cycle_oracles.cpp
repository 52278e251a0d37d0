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
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/suites.hpp"

using namespace matchkit;
using fixtures::error_of;

TEST_CASE("simple cycle enumeration") {
  CHECK(enumerate_simple_cycles(fixtures::triangle("ecs", 0).graph).size() == 1);
  const auto k4 = enumerate_simple_cycles(fixtures::weighted_k4().graph);
  CHECK(k4.size() == 7);
  std::multiset<std::size_t> lengths;
  for (const auto& c : k4) lengths.insert(c.edges.size());
  CHECK(lengths.count(3) == 4);
  CHECK(lengths.count(4) == 3);
  const Graph tree(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(enumerate_simple_cycles(tree).empty());
}

TEST_CASE("cycle enumeration matches the reference on random graphs") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto inst = gen_random_instance(2 + static_cast<int>(seed % 7), 0.5, {0, 0},
                                          ProblemKind::kEwpm, seed);
    const auto mine = enumerate_simple_cycles(inst.graph);
    std::set<std::vector<EdgeId>> got;
    for (const auto& c : mine) {
      CHECK_NOTHROW(check_cycle_set(inst.graph, CycleSet{{c}}));
      auto edges = c.edges;
      std::sort(edges.begin(), edges.end());
      got.insert(edges);
    }
    CHECK(got.size() == mine.size());
    std::set<std::vector<EdgeId>> want;
    for (const auto& c : oracle::all_cycles(inst)) {
      auto edges = c.edges;
      std::sort(edges.begin(), edges.end());
      want.insert(edges);
    }
    CHECK(got == want);
  }
}

TEST_CASE("exact cycle sum by brute force") {
  const auto three = ecs_bruteforce(fixtures::triangle("ecs", 3));
  REQUIRE(three.has_value());
  CHECK(three->cycles.size() == 1);
  const auto zero = ecs_bruteforce(fixtures::triangle("ecs", 0));
  REQUIRE(zero.has_value());
  CHECK(zero->cycles.empty());
  CHECK_FALSE(ecs_bruteforce(fixtures::triangle("ecs", 2)).has_value());
  CHECK(cycle_set_weights(fixtures::triangle("ecs", 2)) == std::set<Weight>{0, 3});
}

TEST_CASE("short odd cycle by brute force") {
  CHECK(soc_bruteforce(fixtures::triangle("soc", 3)).has_value());
  CHECK_FALSE(soc_bruteforce(fixtures::triangle("soc", 2)).has_value());
  for (long long k : {0, 4, 100}) {
    const auto sq = parse_instance("p soc 4 4 " + std::to_string(k) +
                                   "\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 1 1\n");
    CHECK_FALSE(soc_bruteforce(sq).has_value());
  }
}

TEST_CASE("brute force refuses large graphs") {
  const auto big = gen_random_instance(14, 0.3, {0, 3}, ProblemKind::kEcs, 2);
  CHECK(error_of([&] { ecs_bruteforce(big); }) == ErrorCode::kSizeLimit);
  CHECK(error_of([&] { soc_bruteforce(big, 10); }) == ErrorCode::kSizeLimit);
}

TEST_CASE("cycle set enumeration yields disjoint sets once each") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto inst = gen_random_instance(3 + static_cast<int>(seed % 5), 0.6, {0, 0},
                                          ProblemKind::kEwpm, seed);
    std::set<std::vector<std::vector<EdgeId>>> seen;
    int visits = 0;
    for_each_cycle_set(inst.graph, [&](const CycleSet& cs) {
      CHECK_NOTHROW(check_cycle_set(inst.graph, cs));
      std::vector<std::vector<EdgeId>> key;
      for (const auto& c : cs.cycles) {
        auto e = c.edges;
        std::sort(e.begin(), e.end());
        key.push_back(e);
      }
      std::sort(key.begin(), key.end());
      seen.insert(key);
      ++visits;
      return true;
    });
    CHECK(static_cast<std::size_t>(visits) == seen.size());
    CHECK(seen.count({}) == 1);
  }
}

TEST_CASE("exact cycle sum via matchings") {
  const auto yes = ecs_solve(fixtures::triangle("ecs", 3), 2);
  REQUIRE(yes.is_found());
  CHECK(yes.found().weight == 3);
  CHECK(yes.found().cycles.cycles.size() == 1);
  CHECK(ecs_solve(fixtures::triangle("ecs", 2), 3).is_no());
  const auto empty = ecs_solve(fixtures::weighted_k4("ecs", 0), 1);
  REQUIRE(empty.is_found());
  CHECK(empty.found().cycles.cycles.empty());
  CHECK(ecs_solve(fixtures::triangle("ecs", 3), 1).is_budget_exceeded());
}

TEST_CASE("short odd cycle via matchings") {
  const auto yes = soc_solve(fixtures::triangle("soc", 3), 3);
  REQUIRE(yes.is_found());
  CHECK(yes.found().weight == 3);
  CHECK(soc_solve(fixtures::triangle("soc", 1), 3).is_no());
  const auto mixed = parse_instance(
      "p soc 7 7 3\ne 1 2 1\ne 2 3 1\ne 1 3 1\ne 4 5 1\ne 5 6 1\ne 6 7 1\ne 4 7 1\n");
  const auto found = soc_solve(mixed, 4);
  REQUIRE(found.is_found());
  REQUIRE(found.found().cycles.cycles.size() == 1);
  CHECK(found.found().cycles.cycles[0].edges.size() == 3);
  CHECK(found.found().weight == 3);
}

TEST_CASE("pipelines agree with brute force") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    const ProblemKind kind = seed % 2 ? ProblemKind::kEcs : ProblemKind::kSoc;
    const WeightedInstance src = suites::cycle_source(kind, seed);
    const int budget =
        suites::budget_for(oracle::cycle_set_weights(oracle::all_cycles(src)), src.target_k);
    const auto out = kind == ProblemKind::kEcs ? ecs_solve(src, budget) : soc_solve(src, budget);
    REQUIRE_FALSE(out.is_budget_exceeded());
    const bool brute = kind == ProblemKind::kEcs ? ecs_bruteforce(src).has_value()
                                                 : soc_bruteforce(src).has_value();
    CHECK(out.is_found() == brute);
    if (!out.is_found()) continue;
    CHECK_NOTHROW(check_cycle_set(src.graph, out.found().cycles));
    CHECK(cycle_set_weight(src.weights, out.found().cycles) == out.found().weight);
    if (kind == ProblemKind::kEcs) {
      CHECK(out.found().weight == src.target_k);
    } else {
      CHECK(out.found().weight % 2 != 0);
      CHECK(out.found().weight <= src.target_k);
    }
  }
}

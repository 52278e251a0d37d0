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

// Line-oriented text formats for instances and solutions. Vertex ids are
// 1-based in text and 0-based in memory.
//
//   c <comment>
//   p <kind> <n> <m> <k> [<l>]
//   e <u> <v> <w>                      (m lines)
//
//   s yes|no|unknown
//   w <weight>                         (yes only)
//   m <u> <v>                          (matching edges)
//   k <v1> ... <vt>                    (cycles, closed implicitly)

#ifndef MATCHKIT_INSTANCE_IO_HPP_
#define MATCHKIT_INSTANCE_IO_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matchkit/graph.hpp"
#include "matchkit/pm_solver.hpp"

namespace matchkit {

// Parses and validates. Edge order in the text defines edge ids.
WeightedInstance parse_instance(std::string_view text);

// `comments` are written as `c` lines ahead of the problem line.
std::string serialize_instance(const WeightedInstance& inst,
                               std::span<const std::string> comments = {});

enum class SolutionStatus { kYes, kNo, kUnknown };

std::string_view to_string(SolutionStatus status);

struct Solution {
  SolutionStatus status = SolutionStatus::kUnknown;
  std::optional<Weight> weight;
  std::vector<Edge> matching;               // endpoint pairs, 0-based
  std::vector<std::vector<Vertex>> cycles;  // vertex sequences, 0-based
  std::vector<std::string> comments;

  friend bool operator==(const Solution&, const Solution&) = default;
};

Solution parse_solution(std::string_view text);
std::string serialize_solution(const Solution& sol);

Solution no_solution();
Solution unknown_solution();
Solution matching_solution(const Graph& g, const PmResult& result);
Solution cycle_solution(const Graph& g, const CycleSet& cycles, Weight weight);

// Certificates resolved against a graph. Throws kBadId for pairs that are
// not edges and kInvalidCycle for malformed cycles.
Matching solution_matching(const Graph& g, const Solution& sol);
CycleSet solution_cycles(const Graph& g, const Solution& sol);

// Reads a whole file; throws kIo.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace matchkit

#endif  // MATCHKIT_INSTANCE_IO_HPP_

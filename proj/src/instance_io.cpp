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

#include "matchkit/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace matchkit {
namespace {

constexpr long long kMaxCount = 1'000'000;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string where(std::size_t line_no) {
  return "line " + std::to_string(line_no + 1) + ": ";
}

long long parse_int(std::string_view tok, std::size_t line_no, ErrorCode overflow_code) {
  long long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw Error(overflow_code, where(line_no) + "integer out of range: " + std::string(tok));
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorCode::kMalformed, where(line_no) + "not an integer: " + std::string(tok));
  }
  return value;
}

long long parse_count(std::string_view tok, std::size_t line_no) {
  const long long v = parse_int(tok, line_no, ErrorCode::kMalformed);
  if (v < 0 || v > kMaxCount) {
    throw Error(ErrorCode::kMalformed, where(line_no) + "count out of range: " + std::string(tok));
  }
  return v;
}

Vertex parse_vertex(std::string_view tok, std::size_t line_no, long long n) {
  const long long v = parse_int(tok, line_no, ErrorCode::kBadId);
  if (v < 1 || v > n) {
    throw Error(ErrorCode::kBadId, where(line_no) + "vertex id out of range: " + std::string(tok));
  }
  return static_cast<Vertex>(v - 1);
}

bool is_comment(const std::vector<std::string_view>& toks) {
  return toks.empty() || toks.front() == "c";
}

}  // namespace

WeightedInstance parse_instance(std::string_view text) {
  WeightedInstance inst;
  bool have_problem = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i]);
    if (is_comment(toks)) continue;
    if (toks.front() == "p") {
      if (have_problem) throw Error(ErrorCode::kMalformed, where(i) + "second problem line");
      if (toks.size() < 5) throw Error(ErrorCode::kMalformed, where(i) + "short problem line");
      const auto kind = parse_kind(toks[1]);
      if (!kind) {
        throw Error(ErrorCode::kMalformed, where(i) + "unknown kind: " + std::string(toks[1]));
      }
      inst.kind = *kind;
      n = parse_count(toks[2], i);
      m = parse_count(toks[3], i);
      inst.target_k = parse_int(toks[4], i, ErrorCode::kWeightOverflow);
      if (*kind == ProblemKind::kSpm) {
        if (toks.size() != 6) {
          throw Error(ErrorCode::kMissingRank, where(i) + "spm needs <n> <m> <k> <l>");
        }
        const long long l = parse_count(toks[5], i);
        if (l < 1) throw Error(ErrorCode::kMalformed, where(i) + "rank must be positive");
        inst.rank_l = static_cast<int>(l);
      } else if (toks.size() != 5) {
        throw Error(ErrorCode::kMalformed, where(i) + "trailing tokens on problem line");
      }
      have_problem = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (toks.front() == "e") {
      if (!have_problem) {
        throw Error(ErrorCode::kMissingProblemLine, where(i) + "edge before problem line");
      }
      if (toks.size() != 4) throw Error(ErrorCode::kMalformed, where(i) + "edge needs <u> <v> <w>");
      const Vertex u = parse_vertex(toks[1], i, n);
      const Vertex v = parse_vertex(toks[2], i, n);
      edges.push_back({u, v});
      inst.weights.push_back(parse_int(toks[3], i, ErrorCode::kWeightOverflow));
      continue;
    }
    throw Error(ErrorCode::kMalformed, where(i) + "unknown line type: " + std::string(toks.front()));
  }
  if (!have_problem) throw Error(ErrorCode::kMissingProblemLine, "no problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(ErrorCode::kEdgeCountMismatch, "problem line declares " + std::to_string(m) +
                                                   " edges, found " + std::to_string(edges.size()));
  }
  inst.graph = Graph(static_cast<int>(n), std::move(edges));
  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const WeightedInstance& inst,
                               std::span<const std::string> comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p " << to_string(inst.kind) << ' ' << inst.graph.vertex_count() << ' '
      << inst.graph.edge_count() << ' ' << inst.target_k;
  if (inst.rank_l) out << ' ' << *inst.rank_l;
  out << '\n';
  for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
    const Edge& ed = inst.graph.edge(e);
    out << "e " << ed.u + 1 << ' ' << ed.v + 1 << ' ' << inst.weights[static_cast<std::size_t>(e)]
        << '\n';
  }
  return out.str();
}

std::string_view to_string(SolutionStatus status) {
  switch (status) {
    case SolutionStatus::kYes: return "yes";
    case SolutionStatus::kNo: return "no";
    case SolutionStatus::kUnknown: return "unknown";
  }
  return "unknown";
}

Solution parse_solution(std::string_view text) {
  Solution sol;
  bool have_status = false;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto toks = tokens(lines[i]);
    if (toks.empty()) continue;
    const std::string_view tag = toks.front();
    if (tag == "c") {
      const std::string_view line = lines[i];
      const std::size_t pos = line.find('c');
      std::string_view rest = line.substr(pos + 1);
      if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
      sol.comments.emplace_back(rest);
    } else if (tag == "s") {
      if (have_status || toks.size() != 2) {
        throw Error(ErrorCode::kMalformed, where(i) + "bad status line");
      }
      if (toks[1] == "yes") {
        sol.status = SolutionStatus::kYes;
      } else if (toks[1] == "no") {
        sol.status = SolutionStatus::kNo;
      } else if (toks[1] == "unknown") {
        sol.status = SolutionStatus::kUnknown;
      } else {
        throw Error(ErrorCode::kMalformed, where(i) + "bad status: " + std::string(toks[1]));
      }
      have_status = true;
    } else if (tag == "w") {
      if (sol.weight || toks.size() != 2) throw Error(ErrorCode::kMalformed, where(i) + "bad weight line");
      sol.weight = parse_int(toks[1], i, ErrorCode::kWeightOverflow);
    } else if (tag == "m") {
      if (toks.size() != 3) throw Error(ErrorCode::kMalformed, where(i) + "matching edge needs <u> <v>");
      sol.matching.push_back({parse_vertex(toks[1], i, kMaxCount), parse_vertex(toks[2], i, kMaxCount)});
    } else if (tag == "k") {
      if (toks.size() < 2) throw Error(ErrorCode::kMalformed, where(i) + "empty cycle");
      std::vector<Vertex> cycle;
      for (std::size_t t = 1; t < toks.size(); ++t) {
        cycle.push_back(parse_vertex(toks[t], i, kMaxCount));
      }
      sol.cycles.push_back(std::move(cycle));
    } else {
      throw Error(ErrorCode::kMalformed, where(i) + "unknown line type: " + std::string(tag));
    }
  }
  if (!have_status) throw Error(ErrorCode::kMalformed, "no status line");
  if ((sol.status == SolutionStatus::kYes) != sol.weight.has_value()) {
    throw Error(ErrorCode::kMalformed, "weight line must be present iff status is yes");
  }
  if (sol.status != SolutionStatus::kYes && (!sol.matching.empty() || !sol.cycles.empty())) {
    throw Error(ErrorCode::kMalformed, "certificate lines without status yes");
  }
  return sol;
}

std::string serialize_solution(const Solution& sol) {
  std::ostringstream out;
  for (const std::string& c : sol.comments) out << "c " << c << '\n';
  out << "s " << to_string(sol.status) << '\n';
  if (sol.weight) out << "w " << *sol.weight << '\n';
  for (const Edge& e : sol.matching) out << "m " << e.u + 1 << ' ' << e.v + 1 << '\n';
  for (const auto& cycle : sol.cycles) {
    out << 'k';
    for (Vertex v : cycle) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

Solution no_solution() { return Solution{SolutionStatus::kNo, std::nullopt, {}, {}, {}}; }

Solution unknown_solution() {
  return Solution{SolutionStatus::kUnknown, std::nullopt, {}, {}, {}};
}

Solution matching_solution(const Graph& g, const PmResult& result) {
  Solution sol{SolutionStatus::kYes, result.weight, {}, {}, {}};
  for (EdgeId e : result.matching.edges) sol.matching.push_back(g.edge(e));
  return sol;
}

Solution cycle_solution(const Graph& g, const CycleSet& cycles, Weight weight) {
  Solution sol{SolutionStatus::kYes, weight, {}, {}, {}};
  for (const Cycle& c : cycles.cycles) sol.cycles.push_back(cycle_vertices(g, c));
  return sol;
}

Matching solution_matching(const Graph& g, const Solution& sol) {
  std::vector<EdgeId> ids;
  for (const Edge& e : sol.matching) {
    if (e.u >= g.vertex_count() || e.v >= g.vertex_count()) {
      throw Error(ErrorCode::kBadId, "matching vertex out of range");
    }
    const auto id = g.find_edge(e.u, e.v);
    if (!id) {
      throw Error(ErrorCode::kBadId, "no edge {" + std::to_string(e.u + 1) + "," +
                                         std::to_string(e.v + 1) + "}");
    }
    ids.push_back(*id);
  }
  return make_matching(g, std::move(ids));
}

CycleSet solution_cycles(const Graph& g, const Solution& sol) {
  CycleSet cs;
  for (const auto& vertices : sol.cycles) cs.cycles.push_back(cycle_from_vertices(g, vertices));
  check_cycle_set(g, cs);
  return cs;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read " + path);
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path + " for writing");
  out << contents;
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
}

}  // namespace matchkit

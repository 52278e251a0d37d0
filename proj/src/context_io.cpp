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

#include "matchkit/context_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "matchkit/instance_io.hpp"

namespace matchkit {
namespace {

std::string_view resolution_name(Resolution r) {
  switch (r) {
    case Resolution::kNone: return "none";
    case Resolution::kYes: return "yes";
    case Resolution::kNo: return "no";
  }
  return "none";
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::kMalformed, "context: not an integer: " + std::string(tok));
  }
  return v;
}

Vertex to_vertex(std::string_view tok) { return static_cast<Vertex>(to_int(tok) - 1); }

ProblemKind to_kind(std::string_view tok) {
  const auto kind = parse_kind(tok);
  if (!kind) throw Error(ErrorCode::kMalformed, "context: unknown kind " + std::string(tok));
  return *kind;
}

void mismatch(const std::string& what) {
  throw Error(ErrorCode::kContextMismatch, "context does not match its source: " + what);
}

}  // namespace

ReductionRecord make_record(const WeightedInstance& source, const AlternatingReduction& r) {
  ReductionRecord rec;
  rec.from = source.kind;
  rec.to = source.kind == ProblemKind::kBcpm ? ProblemKind::kSoc : ProblemKind::kEcs;
  rec.resolution = r.resolution;
  rec.source = source;
  rec.alternating = r.context;
  return rec;
}

ReductionRecord make_record(const WeightedInstance& source, const GadgetReduction& r) {
  ReductionRecord rec;
  rec.from = source.kind;
  rec.to = source.kind == ProblemKind::kSoc ? ProblemKind::kBcpm : ProblemKind::kEwpm;
  rec.source = source;
  rec.gadget = r.context;
  return rec;
}

std::string serialize_context(const ReductionRecord& record) {
  std::ostringstream out;
  out << "c matchkit reduction context\n";
  out << "dir " << to_string(record.from) << ' ' << to_string(record.to) << '\n';
  out << "resolved " << resolution_name(record.resolution) << '\n';
  if (record.alternating) {
    const AlternatingContext& ctx = *record.alternating;
    out << "param r " << ctx.r << '\n';
    out << "param basew " << ctx.base_weight << '\n';
    out << "param shift " << ctx.shift << '\n';
    for (EdgeId e : ctx.base_matching.edges) {
      const Edge& ed = record.source.graph.edge(e);
      out << "base m " << ed.u + 1 << ' ' << ed.v + 1 << '\n';
    }
  }
  if (record.gadget) {
    const GadgetContext& ctx = *record.gadget;
    const Gadget gadget = build_cycle_gadget(ctx.source.graph, ctx.source.weights);
    for (EdgeId e : ctx.canonical_matching.edges) {
      const Edge& ed = gadget.graph.edge(e);
      out << "base m " << ed.u + 1 << ' ' << ed.v + 1 << '\n';
    }
    for (std::size_t v = 0; v < ctx.vertex_map.size(); ++v) {
      out << "vmap " << v + 1 << ' ' << ctx.vertex_map[v].first + 1 << ' '
          << ctx.vertex_map[v].second + 1 << '\n';
    }
    for (std::size_t e = 0; e < ctx.edge_map.size(); ++e) {
      const Edge& ed = ctx.source.graph.edge(static_cast<EdgeId>(e));
      const auto& ch = ctx.edge_map[e];
      out << "emap " << ed.u + 1 << ' ' << ed.v + 1 << ' ' << ch.at_u + 1 << ' ' << ch.mid_u + 1
          << ' ' << ch.mid_v + 1 << ' ' << ch.at_v + 1 << '\n';
    }
  }
  std::istringstream body(serialize_instance(record.source));
  for (std::string line; std::getline(body, line);) out << "i " << line << '\n';
  return out.str();
}

ReductionRecord parse_context(std::string_view text) {
  ReductionRecord rec;
  bool have_dir = false;
  bool have_resolved = false;
  std::optional<Weight> r, basew, shift;
  std::vector<std::pair<Vertex, Vertex>> base;
  std::vector<std::vector<Vertex>> vmap, emap;
  std::string source_text;

  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (line.rfind("i ", 0) == 0) {
      source_text.append(line.substr(2));
      source_text.push_back('\n');
      continue;
    }
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "dir" && toks.size() == 3) {
      rec.from = to_kind(toks[1]);
      rec.to = to_kind(toks[2]);
      have_dir = true;
    } else if (toks[0] == "resolved" && toks.size() == 2) {
      if (toks[1] == "none") {
        rec.resolution = Resolution::kNone;
      } else if (toks[1] == "yes") {
        rec.resolution = Resolution::kYes;
      } else if (toks[1] == "no") {
        rec.resolution = Resolution::kNo;
      } else {
        throw Error(ErrorCode::kMalformed, "context: bad resolution");
      }
      have_resolved = true;
    } else if (toks[0] == "param" && toks.size() == 3) {
      const Weight v = to_int(toks[2]);
      if (toks[1] == "r") {
        r = v;
      } else if (toks[1] == "basew") {
        basew = v;
      } else if (toks[1] == "shift") {
        shift = v;
      } else {
        throw Error(ErrorCode::kMalformed, "context: unknown param " + std::string(toks[1]));
      }
    } else if (toks[0] == "base" && toks.size() == 4 && toks[1] == "m") {
      base.emplace_back(to_vertex(toks[2]), to_vertex(toks[3]));
    } else if (toks[0] == "vmap" && toks.size() == 4) {
      vmap.push_back({to_vertex(toks[1]), to_vertex(toks[2]), to_vertex(toks[3])});
    } else if (toks[0] == "emap" && toks.size() == 7) {
      std::vector<Vertex> row;
      for (std::size_t t = 1; t < 7; ++t) row.push_back(to_vertex(toks[t]));
      emap.push_back(std::move(row));
    } else {
      throw Error(ErrorCode::kMalformed, "context: bad line: " + std::string(line));
    }
  }
  if (!have_dir || !have_resolved || source_text.empty()) {
    throw Error(ErrorCode::kMalformed, "context: missing dir, resolved or source lines");
  }
  rec.source = parse_instance(source_text);
  if (rec.source.kind != rec.from) mismatch("source kind");

  const auto base_edges = [&](const Graph& g) {
    std::vector<EdgeId> ids;
    for (const auto& [u, v] : base) {
      if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) mismatch("base vertex");
      const auto id = g.find_edge(u, v);
      if (!id) mismatch("base edge");
      ids.push_back(*id);
    }
    return ids;
  };

  if (!is_cycle_kind(rec.from)) {
    if (!vmap.empty() || !emap.empty()) mismatch("gadget maps on a matching source");
    if (r || basew || shift) {
      if (!r || !basew || !shift) throw Error(ErrorCode::kMalformed, "context: incomplete params");
      AlternatingContext ctx;
      ctx.base_matching = make_matching(rec.source.graph, base_edges(rec.source.graph));
      ctx.base_weight = *basew;
      ctx.r = *r;
      ctx.shift = *shift;
      ctx.source = rec.source;
      rec.alternating = std::move(ctx);
    } else if (!base.empty()) {
      throw Error(ErrorCode::kMalformed, "context: base matching without params");
    }
    return rec;
  }

  if (r || basew || shift) mismatch("params on a cycle source");
  Gadget gadget = build_cycle_gadget(rec.source.graph, rec.source.weights);
  GadgetContext& ctx = gadget.context;
  if (make_matching(gadget.graph, base_edges(gadget.graph)) != ctx.canonical_matching) {
    mismatch("canonical matching");
  }
  if (vmap.size() != ctx.vertex_map.size()) mismatch("vertex map size");
  for (std::size_t v = 0; v < vmap.size(); ++v) {
    const auto& p = ctx.vertex_map[v];
    if (vmap[v] != std::vector<Vertex>{static_cast<Vertex>(v), p.first, p.second}) {
      mismatch("vertex map");
    }
  }
  if (emap.size() != ctx.edge_map.size()) mismatch("edge map size");
  for (std::size_t e = 0; e < emap.size(); ++e) {
    const Edge& ed = rec.source.graph.edge(static_cast<EdgeId>(e));
    const auto& ch = ctx.edge_map[e];
    if (emap[e] != std::vector<Vertex>{ed.u, ed.v, ch.at_u, ch.mid_u, ch.mid_v, ch.at_v}) {
      mismatch("edge map");
    }
  }
  ctx.source = rec.source;
  rec.gadget = std::move(ctx);
  return rec;
}

}  // namespace matchkit

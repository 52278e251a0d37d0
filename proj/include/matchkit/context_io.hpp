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

// Sidecar file written next to every reduced instance so a solution of the
// reduced instance can be translated back without the original file.
//
//   c matchkit reduction context
//   dir <from-kind> <to-kind>
//   resolved none|yes|no
//   param r <int>                      (matching -> cycle only)
//   param basew <int>
//   param shift <int>
//   base m <u> <v>                     (base or canonical matching)
//   vmap <v> <v1> <v2>                 (cycle -> matching only)
//   emap <u> <v> <e_u> <e_uv> <e_vu> <e_v>
//   i <source instance line>

#ifndef MATCHKIT_CONTEXT_IO_HPP_
#define MATCHKIT_CONTEXT_IO_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "matchkit/graph.hpp"
#include "matchkit/reductions.hpp"

namespace matchkit {

struct ReductionRecord {
  ProblemKind from = ProblemKind::kEwpm;
  ProblemKind to = ProblemKind::kEcs;
  Resolution resolution = Resolution::kNone;
  WeightedInstance source;
  std::optional<AlternatingContext> alternating;  // from a matching kind
  std::optional<GadgetContext> gadget;            // from a cycle kind

  friend bool operator==(const ReductionRecord&, const ReductionRecord&) = default;
};

ReductionRecord make_record(const WeightedInstance& source, const AlternatingReduction& r);
ReductionRecord make_record(const WeightedInstance& source, const GadgetReduction& r);

std::string serialize_context(const ReductionRecord& record);

// Throws kMalformed on syntax errors and kContextMismatch when the maps do
// not describe the embedded source instance.
ReductionRecord parse_context(std::string_view text);

}  // namespace matchkit

#endif  // MATCHKIT_CONTEXT_IO_HPP_

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

#ifndef MATCHKIT_ERROR_HPP_
#define MATCHKIT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchkit {

enum class ErrorCode {
  kMalformed,           // unparseable line or token
  kMissingProblemLine,
  kEdgeCountMismatch,
  kBadId,               // vertex or edge id out of range
  kNonSimple,           // self-loop or parallel edge
  kWeightOverflow,
  kNonConservative,
  kMissingRank,
  kForcedSetConflict,   // two forced edges share a vertex
  kNotAlternating,
  kNotDisjoint,
  kNotPerfect,
  kInvalidCycle,
  kSizeLimit,
  kContextMismatch,
  kUnsupported,
  kIo,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matchkit

#endif  // MATCHKIT_ERROR_HPP_

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

#ifndef MATCHKIT_TESTS_SUPPORT_FIXTURES_HPP_
#define MATCHKIT_TESTS_SUPPORT_FIXTURES_HPP_

#include <functional>
#include <optional>
#include <string>

#include "matchkit/error.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/instance_io.hpp"

namespace fixtures {

using matchkit::ErrorCode;
using matchkit::WeightedInstance;

// Error code thrown by `f`, or nullopt if it returns normally.
inline std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const matchkit::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Square whose edges 2-3 and 4-1 weigh 1 and the others 0.
inline WeightedInstance four_cycle(const std::string& kind = "ewpm", long long k = 2) {
  return matchkit::parse_instance("p " + kind + " 4 4 " + std::to_string(k) +
                                  (kind == "spm" ? " 2" : "") +
                                  "\ne 1 2 0\ne 2 3 1\ne 3 4 0\ne 4 1 1\n");
}

inline WeightedInstance triangle(const std::string& kind, long long k, long long w1 = 1,
                                 long long w2 = 1, long long w3 = 1) {
  return matchkit::parse_instance("p " + kind + " 3 3 " + std::to_string(k) + "\ne 1 2 " +
                                  std::to_string(w1) + "\ne 2 3 " + std::to_string(w2) +
                                  "\ne 1 3 " + std::to_string(w3) + "\n");
}

// K4 with w(12)=1, w(34)=2, w(13)=3, w(24)=4, w(14)=5, w(23)=6.
inline WeightedInstance weighted_k4(const std::string& kind = "ewpm", long long k = 3) {
  return matchkit::parse_instance("p " + kind + " 4 6 " + std::to_string(k) +
                                  (kind == "spm" ? " 3" : "") +
                                  "\ne 1 2 1\ne 3 4 2\ne 1 3 3\ne 2 4 4\ne 1 4 5\ne 2 3 6\n");
}

inline WeightedInstance single_edge(const std::string& kind, long long w, long long k) {
  return matchkit::parse_instance("p " + kind + " 2 1 " + std::to_string(k) + "\ne 1 2 " +
                                  std::to_string(w) + "\n");
}

}  // namespace fixtures

#endif  // MATCHKIT_TESTS_SUPPORT_FIXTURES_HPP_

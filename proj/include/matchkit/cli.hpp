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

// The `matchkit` command line: solve, reduce, lift, verify, gen, oracle.
//
// Exit codes: 0 yes, 1 no, 2 unknown (budget exhausted or nothing to
// certify), 64 usage, 65 malformed or invalid data, 66 I/O, 67 size limit,
// 70 solver and oracle disagree, 71 certificate verification failed.

#ifndef MATCHKIT_CLI_HPP_
#define MATCHKIT_CLI_HPP_

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "matchkit/instance_io.hpp"
#include "matchkit/spm.hpp"

namespace matchkit::cli {

enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUnknown = 2,
  kExitUsage = 64,
  kExitData = 65,
  kExitIo = 66,
  kExitSizeLimit = 67,
  kExitDisagree = 70,
  kExitVerify = 71,
};

int exit_code_for(SolutionStatus status);

// Brute-force vertex cap: MATCHKIT_BRUTE_LIMIT if set, else 12.
int brute_limit();

// Dispatches on the instance kind to the rank-based solvers.
Solution solve(const WeightedInstance& inst, int budget_l, const SpmOptions& options = {});

// Exhaustive answer; throws kSizeLimit above `vertex_limit` vertices.
Solution oracle(const WeightedInstance& inst, int vertex_limit);

// Reason a `yes` solution does not certify `inst`, or nullopt if it does.
// Solutions with another status are not inspected.
std::optional<std::string> check_certificate(const WeightedInstance& inst, const Solution& sol,
                                             const SpmOptions& options = {});

// Replaces the solver behind `solve`; tests use it to exercise the
// disagreement path.
using SolverFn = std::function<Solution(const WeightedInstance&, int, const SpmOptions&)>;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const SolverFn& solver = {});

}  // namespace matchkit::cli

#endif  // MATCHKIT_CLI_HPP_

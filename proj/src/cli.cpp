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

#include "matchkit/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <charconv>

#include "matchkit/context_io.hpp"
#include "matchkit/cycle_oracles.hpp"
#include "matchkit/generators.hpp"
#include "matchkit/pm_solver.hpp"
#include "matchkit/reductions.hpp"

namespace matchkit::cli {
namespace {

int error_exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIo: return kExitIo;
    case ErrorCode::kSizeLimit: return kExitSizeLimit;
    default: return kExitData;
  }
}

Solution from_outcome(const Graph& g, const SolveOutcome& outcome) {
  if (outcome.is_found()) return matching_solution(g, outcome.found().result);
  if (outcome.is_no()) return no_solution();
  Solution sol = unknown_solution();
  sol.comments.push_back(
      "ranks explored " +
      std::to_string(std::get<SolveOutcome::BudgetExceeded>(outcome.value).ranks_explored));
  return sol;
}

Solution from_outcome(const Graph& g, const CycleSolveOutcome& outcome) {
  if (outcome.is_found()) return cycle_solution(g, outcome.found().cycles, outcome.found().weight);
  if (outcome.is_no()) return no_solution();
  Solution sol = unknown_solution();
  sol.comments.push_back(
      "ranks explored " +
      std::to_string(std::get<CycleSolveOutcome::BudgetExceeded>(outcome.value).ranks_explored));
  return sol;
}

bool bounded_parity(Weight w, Weight k) { return w <= k && (k - w) % 2 == 0; }

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

int finish(const Solution& sol, const std::string& path, std::ostream& out) {
  emit(serialize_solution(sol), path, out);
  return exit_code_for(sol.status);
}

SpmOptions spm_options(const std::string& bound, unsigned workers) {
  SpmOptions options;
  options.workers = workers;
  if (bound == "on") {
    options.bipartite_bound = BipartiteBound::kOn;
  } else if (bound == "off") {
    options.bipartite_bound = BipartiteBound::kOff;
  }
  return options;
}

// Paths that name the same file (when both given) are a usage error.
bool distinct_paths(const std::vector<std::string>& paths, std::ostream& err) {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (!paths[i].empty() && paths[i] == paths[j]) {
        err << "matchkit: " << paths[i] << " given twice\n";
        return false;
      }
    }
  }
  return true;
}

// Solution translation. Any failure here is a verification failure.
class LiftFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Solution lift_alternating(const ReductionRecord& rec, const Solution& sol) {
  const WeightedInstance& source = rec.source;
  const AlternatingReduction red = rec.from == ProblemKind::kBcpm ? reduce_bcpm_to_soc(source)
                                                                  : reduce_ewpm_to_ecs(source);
  if (red.resolution != rec.resolution || red.context != rec.alternating) {
    throw Error(ErrorCode::kContextMismatch, "context does not match its source instance");
  }
  if (red.resolution == Resolution::kNo) return no_solution();
  if (red.resolution == Resolution::kYes) {
    const Matching& base = red.context->base_matching;
    return matching_solution(source.graph,
                             PmResult{base, total_weight(source.weights, base.edges)});
  }
  if (sol.status != SolutionStatus::kYes) return sol;
  if (auto why = check_certificate(red.instance, sol)) {
    throw LiftFailure("reduced solution rejected: " + *why);
  }
  try {
    const CycleSet cycles = solution_cycles(red.instance.graph, sol);
    return matching_solution(source.graph, lift_cycles_to_matching(cycles, *red.context));
  } catch (const Error& e) {
    throw LiftFailure(e.what());
  }
}

Solution lift_gadget(const ReductionRecord& rec, const Solution& sol) {
  const WeightedInstance& source = rec.source;
  const GadgetReduction red = rec.from == ProblemKind::kSoc ? reduce_soc_to_bcpm(source)
                                                            : reduce_ecs_to_ewpm(source);
  if (!rec.gadget || red.context != *rec.gadget) {
    throw Error(ErrorCode::kContextMismatch, "context does not match its source instance");
  }
  if (sol.status != SolutionStatus::kYes) return sol;
  if (auto why = check_certificate(red.instance, sol)) {
    throw LiftFailure("reduced solution rejected: " + *why);
  }
  CycleSet cycles;
  try {
    cycles = project_matching_to_cycles(solution_matching(red.instance.graph, sol), red.context);
  } catch (const Error& e) {
    throw LiftFailure(e.what());
  }
  if (source.kind == ProblemKind::kEcs) {
    return cycle_solution(source.graph, cycles, cycle_set_weight(source.weights, cycles));
  }
  for (const Cycle& c : cycles.cycles) {
    const Weight w = cycle_weight(source.weights, c);
    if (w % 2 != 0 && w <= source.target_k) {
      return cycle_solution(source.graph, CycleSet{{c}}, w);
    }
  }
  throw LiftFailure("projected cycles contain no odd cycle of weight <= k");
}

int cmd_solve(const std::string& in, const std::string& out_path, int budget, bool with_oracle,
              const SpmOptions& options, const SolverFn& solver, std::ostream& out,
              std::ostream& err) {
  const WeightedInstance inst = parse_instance(read_file(in));
  Solution sol = solver ? solver(inst, budget, options) : solve(inst, budget, options);
  int code = exit_code_for(sol.status);
  if (with_oracle) {
    if (auto why = check_certificate(inst, sol, options)) {
      err << "matchkit: solver certificate rejected: " << *why << '\n';
      code = kExitDisagree;
    }
    const Solution truth = oracle(inst, brute_limit());
    sol.comments.push_back("oracle " + std::string(to_string(truth.status)));
    if (sol.status != SolutionStatus::kUnknown && sol.status != truth.status) {
      err << "matchkit: solver says " << to_string(sol.status) << ", oracle says "
          << to_string(truth.status) << '\n';
      code = kExitDisagree;
    }
  }
  emit(serialize_solution(sol), out_path, out);
  return code;
}

int cmd_reduce(const std::string& in, const std::string& to_name, const std::string& out_path,
               const std::string& ctx_path, std::ostream& out, std::ostream& err) {
  const WeightedInstance inst = parse_instance(read_file(in));
  const auto to = parse_kind(to_name);
  ReductionRecord rec;
  WeightedInstance reduced;
  if (inst.kind == ProblemKind::kEwpm && to == ProblemKind::kEcs) {
    const AlternatingReduction r = reduce_ewpm_to_ecs(inst);
    rec = make_record(inst, r);
    reduced = r.instance;
  } else if (inst.kind == ProblemKind::kBcpm && to == ProblemKind::kSoc) {
    const AlternatingReduction r = reduce_bcpm_to_soc(inst);
    rec = make_record(inst, r);
    reduced = r.instance;
  } else if (inst.kind == ProblemKind::kEcs && to == ProblemKind::kEwpm) {
    const GadgetReduction r = reduce_ecs_to_ewpm(inst);
    rec = make_record(inst, r);
    reduced = r.instance;
  } else if (inst.kind == ProblemKind::kSoc && to == ProblemKind::kBcpm) {
    const GadgetReduction r = reduce_soc_to_bcpm(inst);
    rec = make_record(inst, r);
    reduced = r.instance;
  } else {
    err << "matchkit: unsupported reduction " << to_string(inst.kind) << " -> " << to_name
        << " (supported: ewpm->ecs, bcpm->soc, ecs->ewpm, soc->bcpm)\n";
    return kExitUsage;
  }
  std::vector<std::string> comments;
  if (rec.resolution == Resolution::kYes) comments.emplace_back("resolved yes");
  if (rec.resolution == Resolution::kNo) comments.emplace_back("resolved no");
  emit(serialize_instance(reduced, comments), out_path, out);
  write_file(ctx_path, serialize_context(rec));
  return kExitYes;
}

int cmd_lift(const std::string& ctx_path, const std::string& sol_path,
             const std::string& out_path, std::ostream& out, std::ostream& err) {
  const ReductionRecord rec = parse_context(read_file(ctx_path));
  const Solution sol = parse_solution(read_file(sol_path));
  Solution lifted;
  try {
    lifted = is_cycle_kind(rec.from) ? lift_gadget(rec, sol) : lift_alternating(rec, sol);
    if (auto why = check_certificate(rec.source, lifted)) throw LiftFailure(*why);
  } catch (const LiftFailure& e) {
    err << "matchkit: lift failed: " << e.what() << '\n';
    return kExitVerify;
  }
  return finish(lifted, out_path, out);
}

int cmd_verify(const std::string& in, const std::string& sol_path, int budget,
               std::ostream& out, std::ostream& err) {
  const WeightedInstance inst = parse_instance(read_file(in));
  const Solution sol = parse_solution(read_file(sol_path));
  switch (sol.status) {
    case SolutionStatus::kYes:
      if (auto why = check_certificate(inst, sol)) {
        err << "matchkit: invalid: " << *why << '\n';
        return kExitVerify;
      }
      out << "valid\n";
      return kExitYes;
    case SolutionStatus::kNo: {
      const Solution mine = solve(inst, budget);
      if (mine.status == SolutionStatus::kYes) {
        err << "matchkit: invalid: the instance has a solution of weight " << *mine.weight
            << '\n';
        return kExitVerify;
      }
      if (mine.status == SolutionStatus::kUnknown) {
        out << "unconfirmed: budget exhausted\n";
        return kExitUnknown;
      }
      out << "valid\n";
      return kExitYes;
    }
    case SolutionStatus::kUnknown:
      out << "nothing to verify\n";
      return kExitUnknown;
  }
  return kExitUnknown;
}

// `m` with a decimal point is an edge probability, otherwise an edge count.
int cmd_gen(const std::vector<std::string>& random, int tightness, const std::string& side,
            const std::string& out_path, std::ostream& out, std::ostream& err) {
  WeightedInstance inst;
  if (!random.empty()) {
    const auto to_ll = [&](const std::string& s) {
      long long v = 0;
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::kMalformed, "not an integer: " + s);
      }
      return v;
    };
    const auto kind = parse_kind(random[4]);
    if (!kind) {
      err << "matchkit: unknown kind " << random[4] << '\n';
      return kExitUsage;
    }
    const int n = static_cast<int>(to_ll(random[0]));
    const WeightRange range{to_ll(random[2]), to_ll(random[3])};
    const auto seed = static_cast<std::uint64_t>(to_ll(random[5]));
    if (random[1].find('.') != std::string::npos) {
      inst = gen_random_instance(n, std::stod(random[1]), range, *kind, seed);
    } else {
      inst = gen_random_instance_m(n, static_cast<int>(to_ll(random[1])), range, *kind, seed);
    }
  } else {
    inst = gen_tightness_family(
        tightness, side == "bipartite" ? TightnessSide::kBipartite : TightnessSide::kGeneral);
  }
  emit(serialize_instance(inst), out_path, out);
  return kExitYes;
}

int cmd_oracle(const std::string& in, const std::string& out_path, std::ostream& out) {
  const WeightedInstance inst = parse_instance(read_file(in));
  return finish(oracle(inst, brute_limit()), out_path, out);
}

}  // namespace

int exit_code_for(SolutionStatus status) {
  switch (status) {
    case SolutionStatus::kYes: return kExitYes;
    case SolutionStatus::kNo: return kExitNo;
    case SolutionStatus::kUnknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int brute_limit() {
  const char* env = std::getenv("MATCHKIT_BRUTE_LIMIT");
  if (env == nullptr) return kDefaultCycleBruteLimit;
  int v = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
    throw Error(ErrorCode::kMalformed, "MATCHKIT_BRUTE_LIMIT must be a non-negative integer");
  }
  return v;
}

Solution solve(const WeightedInstance& inst, int budget_l, const SpmOptions& options) {
  switch (inst.kind) {
    case ProblemKind::kEwpm:
      return from_outcome(inst.graph, ewpm_solve(inst, budget_l, options));
    case ProblemKind::kBcpm:
      return from_outcome(inst.graph, bcpm_solve(inst, budget_l, options));
    case ProblemKind::kEcs:
      return from_outcome(inst.graph, ecs_solve(inst, budget_l, options));
    case ProblemKind::kSoc:
      return from_outcome(inst.graph, soc_solve(inst, budget_l, options));
    case ProblemKind::kSpm: {
      const int l = inst.rank_l.value_or(1);
      const RankTable table = spm_ranks(inst, l, options);
      if (static_cast<int>(table.entries.size()) >= l &&
          table.entries[static_cast<std::size_t>(l - 1)].weight == inst.target_k) {
        const RankEntry& hit = table.entries[static_cast<std::size_t>(l - 1)];
        return matching_solution(inst.graph, PmResult{hit.witness, hit.weight});
      }
      return no_solution();
    }
  }
  return unknown_solution();
}

Solution oracle(const WeightedInstance& inst, int vertex_limit) {
  if (inst.graph.vertex_count() > vertex_limit) {
    throw Error(ErrorCode::kSizeLimit, "oracle limited to " + std::to_string(vertex_limit) +
                                           " vertices (MATCHKIT_BRUTE_LIMIT)");
  }
  const Graph& g = inst.graph;
  switch (inst.kind) {
    case ProblemKind::kEwpm:
      for (const Matching& m : enumerate_perfect_matchings(g)) {
        const Weight w = total_weight(inst.weights, m.edges);
        if (w == inst.target_k) return matching_solution(g, PmResult{m, w});
      }
      return no_solution();
    case ProblemKind::kBcpm: {
      std::optional<PmResult> best;
      for (const Matching& m : enumerate_perfect_matchings(g)) {
        const Weight w = total_weight(inst.weights, m.edges);
        if (bounded_parity(w, inst.target_k) && (!best || w < best->weight)) best = PmResult{m, w};
      }
      return best ? matching_solution(g, *best) : no_solution();
    }
    case ProblemKind::kSpm: {
      const int l = inst.rank_l.value_or(1);
      const RankTable table = spm_ranks_bruteforce(inst, l, vertex_limit);
      if (static_cast<int>(table.entries.size()) >= l &&
          table.entries[static_cast<std::size_t>(l - 1)].weight == inst.target_k) {
        const RankEntry& hit = table.entries[static_cast<std::size_t>(l - 1)];
        return matching_solution(g, PmResult{hit.witness, hit.weight});
      }
      return no_solution();
    }
    case ProblemKind::kEcs: {
      const auto hit = ecs_bruteforce(inst, vertex_limit);
      return hit ? cycle_solution(g, *hit, inst.target_k) : no_solution();
    }
    case ProblemKind::kSoc: {
      const auto hit = soc_bruteforce(inst, vertex_limit);
      return hit ? cycle_solution(g, CycleSet{{*hit}}, cycle_weight(inst.weights, *hit))
                 : no_solution();
    }
  }
  return unknown_solution();
}

std::optional<std::string> check_certificate(const WeightedInstance& inst, const Solution& sol,
                                             const SpmOptions& options) {
  if (sol.status != SolutionStatus::kYes) return std::nullopt;
  if (!sol.weight) return "missing weight line";
  const Weight k = inst.target_k;
  try {
    if (!is_cycle_kind(inst.kind)) {
      if (!sol.cycles.empty()) return "cycle lines in a matching certificate";
      const Matching m = solution_matching(inst.graph, sol);
      const auto w = verify_perfect_matching(inst.graph, inst.weights, m);
      if (!w) return "not a perfect matching";
      if (*w != *sol.weight) {
        return "weight line says " + std::to_string(*sol.weight) + ", matching weighs " +
               std::to_string(*w);
      }
      if (inst.kind == ProblemKind::kBcpm) {
        if (!bounded_parity(*w, k)) return "weight above k or of the wrong parity";
        return std::nullopt;
      }
      if (*w != k) return "matching weight differs from k";
      if (inst.kind == ProblemKind::kSpm) {
        const int l = inst.rank_l.value_or(1);
        const RankTable table = spm_ranks(inst, l, options);
        if (static_cast<int>(table.entries.size()) < l ||
            table.entries[static_cast<std::size_t>(l - 1)].weight != k) {
          return "k is not the rank-" + std::to_string(l) + " weight";
        }
      }
      return std::nullopt;
    }
    if (!sol.matching.empty()) return "matching lines in a cycle certificate";
    const CycleSet cycles = solution_cycles(inst.graph, sol);
    const Weight w = cycle_set_weight(inst.weights, cycles);
    if (w != *sol.weight) {
      return "weight line says " + std::to_string(*sol.weight) + ", cycles weigh " +
             std::to_string(w);
    }
    if (inst.kind == ProblemKind::kEcs) {
      if (w != k) return "cycle-set weight differs from k";
      return std::nullopt;
    }
    if (cycles.cycles.size() != 1) return "expected exactly one cycle";
    if (w % 2 == 0 || w > k) return "cycle weight is even or above k";
    return std::nullopt;
  } catch (const Error& e) {
    return std::string(e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const SolverFn& solver) {
  CLI::App app{"Exact-weight perfect matchings and conservative cycle problems.", "matchkit"};
  app.require_subcommand(1);

  std::string input, output, context, solution, bound = "auto", to, side = "general";
  int budget = kDefaultBudget;
  unsigned workers = 1;
  bool with_oracle = false;
  std::vector<std::string> random;
  int tightness = 0;

  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print a certificate.");
  solve_cmd->add_option("file", input, "Instance file")->required();
  solve_cmd->add_option("-o,--output", output, "Solution file (default: stdout)");
  solve_cmd->add_option("--budget", budget, "Ranks to explore")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--oracle", with_oracle, "Cross-check with the brute-force oracle");
  solve_cmd->add_option("--bipartite-bound", bound, "Use the bipartite forced-set bound")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  solve_cmd->add_option("--workers", workers, "Threads for the forced-set sweep (0: all cores)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce to the equivalent problem.");
  reduce_cmd->add_option("file", input, "Instance file")->required();
  reduce_cmd->add_option("--to", to, "Target kind")
      ->required()
      ->check(CLI::IsMember({"ewpm", "bcpm", "ecs", "soc", "spm"}));
  reduce_cmd->add_option("-o,--output", output, "Reduced instance (default: stdout)");
  reduce_cmd->add_option("--context", context, "Context sidecar file")->required();

  auto* lift_cmd = app.add_subcommand("lift", "Translate a reduced solution back.");
  lift_cmd->add_option("--context", context, "Context sidecar file")->required();
  lift_cmd->add_option("--solution", solution, "Solution of the reduced instance")->required();
  lift_cmd->add_option("-o,--output", output, "Translated solution (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Check a solution against an instance.");
  verify_cmd->add_option("file", input, "Instance file")->required();
  verify_cmd->add_option("--solution", solution, "Solution file")->required();
  verify_cmd->add_option("--budget", budget, "Ranks to explore when checking `s no`")
      ->check(CLI::PositiveNumber);

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance.");
  auto* random_opt = gen_cmd->add_option("--random", random, "n m wmin wmax kind seed")
                         ->expected(6)
                         ->type_name("N M WMIN WMAX KIND SEED");
  auto* tight_opt = gen_cmd->add_option("--tightness", tightness, "Tightness family rank L")
                        ->check(CLI::Range(2, 1000));
  gen_cmd->add_option("--side", side, "bipartite or general")
      ->check(CLI::IsMember({"bipartite", "general"}));
  gen_cmd->add_option("-o,--output", output, "Instance file (default: stdout)");
  random_opt->excludes(tight_opt);
  gen_cmd->require_option(1, 2);

  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive answer for small instances.");
  oracle_cmd->add_option("file", input, "Instance file")->required();
  oracle_cmd->add_option("-o,--output", output, "Solution file (default: stdout)");

  std::vector<const char*> argv{"matchkit"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*gen_cmd && random.empty() && tightness == 0) {
      throw CLI::ValidationError("gen", "one of --random or --tightness is required");
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (*solve_cmd) {
      if (!distinct_paths({input, output}, err)) return kExitUsage;
      return cmd_solve(input, output, budget, with_oracle, spm_options(bound, workers), solver,
                       out, err);
    }
    if (*reduce_cmd) {
      if (!distinct_paths({input, output, context}, err)) return kExitUsage;
      return cmd_reduce(input, to, output, context, out, err);
    }
    if (*lift_cmd) {
      if (!distinct_paths({context, solution, output}, err)) return kExitUsage;
      return cmd_lift(context, solution, output, out, err);
    }
    if (*verify_cmd) return cmd_verify(input, solution, budget, out, err);
    if (*gen_cmd) return cmd_gen(random, tightness, side, output, out, err);
    if (*oracle_cmd) {
      if (!distinct_paths({input, output}, err)) return kExitUsage;
      return cmd_oracle(input, output, out);
    }
  } catch (const Error& e) {
    err << "matchkit: " << to_string(e.code()) << ": " << e.what() << '\n';
    return error_exit_code(e);
  } catch (const std::exception& e) {
    err << "matchkit: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace matchkit::cli

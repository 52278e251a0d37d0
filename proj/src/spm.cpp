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

#include "matchkit/spm.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <string>
#include <thread>

namespace matchkit {
namespace {

bool use_bipartite_bound(const Graph& g, BipartiteBound mode) {
  switch (mode) {
    case BipartiteBound::kOn: return true;
    case BipartiteBound::kOff: return false;
    case BipartiteBound::kAuto: return is_bipartite(g);
  }
  return false;
}

// Level-by-level sweep over forced sets: size 0, 1, 2, ... up to the bound
// for `max_rank`. Sets within a level are visited in lexicographic order of
// their sorted edge ids; a weight keeps the first witness seen.
//
// A forced set is expanded only while its forced minimum could still be one
// of the `max_rank` smallest weights (and at most `ceiling`). Adding edges
// never lowers the forced minimum, so the subtrees that are cut cannot hold
// a smaller weight; every prefix of a forced set that attains k_r has a
// forced minimum of at most k_r and survives.
class RankSweep {
 public:
  RankSweep(const Graph& g, std::span<const Weight> w, int max_rank,
            bool bipartite, std::optional<Weight> ceiling, unsigned workers)
      : g_(g),
        w_(w),
        max_rank_(max_rank),
        bipartite_(bipartite),
        ceiling_(ceiling),
        max_size_(bipartite ? max_rank - 1 : 2 * (max_rank - 1)),
        workers_(workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                              : workers) {}

  // Processes the next forced-set size. Returns false when nothing remains.
  bool step();

  // Ranks whose weights can no longer change.
  int certified() const {
    if (size_ < 0) return 0;
    if (finished()) return max_rank_;
    const int r = bipartite_ ? size_ + 1 : size_ / 2 + 1;
    return std::min(r, max_rank_);
  }

  bool finished() const {
    return size_ >= 0 && (size_ >= max_size_ || frontier_.empty());
  }

  // Fewer distinct weights (at most the ceiling) exist than are certified.
  bool exhausted() const {
    return static_cast<int>(found_.size()) < certified();
  }

  std::vector<RankEntry> certified_entries() const {
    std::vector<RankEntry> out;
    const int limit = certified();
    for (const auto& [weight, hit] : found_) {
      if (static_cast<int>(out.size()) >= limit) break;
      out.push_back({static_cast<int>(out.size()) + 1, weight, hit.witness,
                     hit.forced});
    }
    return out;
  }

 private:
  struct Hit {
    Matching witness;
    ForcedSet forced;
  };

  std::vector<std::optional<PmResult>> evaluate(
      const std::vector<std::vector<EdgeId>>& sets) const;
  void record(const std::vector<EdgeId>& forced, const PmResult& result);
  bool keeps(Weight value) const;

  const Graph& g_;
  std::span<const Weight> w_;
  int max_rank_;
  bool bipartite_;
  std::optional<Weight> ceiling_;
  int max_size_;
  unsigned workers_;
  int size_ = -1;
  std::vector<std::vector<EdgeId>> frontier_;
  std::map<Weight, Hit> found_;
};

std::vector<std::optional<PmResult>> RankSweep::evaluate(
    const std::vector<std::vector<EdgeId>>& sets) const {
  std::vector<std::optional<PmResult>> results(sets.size());
  auto solve = [&](std::size_t i) {
    results[i] = min_weight_pm_forced(g_, w_, ForcedSet{sets[i]});
  };
  const std::size_t threads = std::min<std::size_t>(workers_, sets.size() / 16 + 1);
  if (threads <= 1) {
    for (std::size_t i = 0; i < sets.size(); ++i) solve(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < sets.size(); i = next++) solve(i);
    });
  }
  pool.clear();
  return results;
}

void RankSweep::record(const std::vector<EdgeId>& forced, const PmResult& result) {
  if (ceiling_ && result.weight > *ceiling_) return;
  if (found_.count(result.weight)) return;
  found_.emplace(result.weight, Hit{result.matching, ForcedSet{forced}});
  if (static_cast<int>(found_.size()) > max_rank_) found_.erase(std::prev(found_.end()));
}

bool RankSweep::keeps(Weight value) const {
  if (ceiling_ && value > *ceiling_) return false;
  if (static_cast<int>(found_.size()) < max_rank_) return true;
  return value < std::prev(found_.end())->first;
}

bool RankSweep::step() {
  if (finished()) return false;
  std::vector<std::vector<EdgeId>> candidates;
  if (size_ < 0) {
    candidates.emplace_back();
  } else {
    std::vector<char> covered(static_cast<std::size_t>(g_.vertex_count()), 0);
    for (const auto& forced : frontier_) {
      for (EdgeId e : forced) {
        covered[static_cast<std::size_t>(g_.edge(e).u)] = 1;
        covered[static_cast<std::size_t>(g_.edge(e).v)] = 1;
      }
      const EdgeId first = forced.empty() ? 0 : forced.back() + 1;
      for (EdgeId e = first; e < g_.edge_count(); ++e) {
        if (covered[static_cast<std::size_t>(g_.edge(e).u)] ||
            covered[static_cast<std::size_t>(g_.edge(e).v)]) {
          continue;
        }
        candidates.push_back(forced);
        candidates.back().push_back(e);
      }
      for (EdgeId e : forced) {
        covered[static_cast<std::size_t>(g_.edge(e).u)] = 0;
        covered[static_cast<std::size_t>(g_.edge(e).v)] = 0;
      }
    }
  }
  ++size_;

  const auto results = evaluate(candidates);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (results[i]) record(candidates[i], *results[i]);
  }
  frontier_.clear();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (results[i] && keeps(results[i]->weight)) {
      frontier_.push_back(std::move(candidates[i]));
    }
  }
  return true;
}

void check_rank(int l) {
  if (l < 1) {
    throw Error(ErrorCode::kMalformed, "rank must be at least 1, got " +
                                           std::to_string(l));
  }
}

template <typename Accept>
SolveOutcome solve_by_rank(const WeightedInstance& inst, int budget_l,
                           const SpmOptions& options, Accept accept) {
  check_rank(budget_l);
  RankSweep sweep(inst.graph, inst.weights, budget_l,
                  use_bipartite_bound(inst.graph, options.bipartite_bound),
                  inst.target_k, options.workers);
  while (sweep.step()) {
    for (const RankEntry& entry : sweep.certified_entries()) {
      if (accept(entry.weight)) {
        return {SolveOutcome::Found{PmResult{entry.witness, entry.weight}, entry.rank}};
      }
    }
    if (sweep.exhausted()) return {SolveOutcome::DefiniteNo{}};
    if (sweep.certified() >= budget_l) break;
  }
  return {SolveOutcome::BudgetExceeded{sweep.certified()}};
}

}  // namespace

RankTable spm_ranks(const WeightedInstance& inst, int l, const SpmOptions& options) {
  check_rank(l);
  RankSweep sweep(inst.graph, inst.weights, l,
                  use_bipartite_bound(inst.graph, options.bipartite_bound),
                  std::nullopt, options.workers);
  while (sweep.step() && !sweep.exhausted()) {
  }
  RankTable table;
  table.entries = sweep.certified_entries();
  table.complete = sweep.exhausted() ||
                   static_cast<int>(table.entries.size()) < l;
  if (!table.complete) {
    // All weights are listed iff the heaviest one is the maximum.
    std::vector<Weight> negated(inst.weights.size());
    for (std::size_t i = 0; i < negated.size(); ++i) negated[i] = checked_sub(0, inst.weights[i]);
    const auto heaviest = min_weight_pm(inst.graph, negated);
    table.complete = checked_sub(0, heaviest->weight) == table.entries.back().weight;
  }
  return table;
}

RankTable spm_ranks_bruteforce(const WeightedInstance& inst, int l,
                               int vertex_limit) {
  check_rank(l);
  if (inst.graph.vertex_count() > vertex_limit) {
    throw Error(ErrorCode::kSizeLimit,
                "brute force limited to " + std::to_string(vertex_limit) +
                    " vertices");
  }
  std::map<Weight, Matching> first_of;
  for (const Matching& m : enumerate_perfect_matchings(inst.graph)) {
    first_of.emplace(total_weight(inst.weights, m.edges), m);
  }
  RankTable table;
  for (const auto& [weight, witness] : first_of) {
    if (static_cast<int>(table.entries.size()) >= l) break;
    table.entries.push_back(
        {static_cast<int>(table.entries.size()) + 1, weight, witness, {}});
  }
  table.complete = static_cast<int>(first_of.size()) <= l;
  return table;
}

bool spm_decide(const WeightedInstance& inst, const SpmOptions& options) {
  if (!inst.rank_l) {
    throw Error(ErrorCode::kMissingRank, "spm instance needs a rank");
  }
  const int l = *inst.rank_l;
  check_rank(l);
  RankSweep sweep(inst.graph, inst.weights, l,
                  use_bipartite_bound(inst.graph, options.bipartite_bound),
                  inst.target_k, options.workers);
  while (sweep.step() && !sweep.exhausted()) {
  }
  const auto entries = sweep.certified_entries();
  return static_cast<int>(entries.size()) >= l &&
         entries[static_cast<std::size_t>(l - 1)].weight == inst.target_k;
}

SolveOutcome ewpm_solve(const WeightedInstance& inst, int budget_l,
                        const SpmOptions& options) {
  return solve_by_rank(inst, budget_l, options,
                       [k = inst.target_k](Weight w) { return w == k; });
}

SolveOutcome bcpm_solve(const WeightedInstance& inst, int budget_l,
                        const SpmOptions& options) {
  return solve_by_rank(inst, budget_l, options, [k = inst.target_k](Weight w) {
    return w <= k && checked_sub(k, w) % 2 == 0;
  });
}

}  // namespace matchkit

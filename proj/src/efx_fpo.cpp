#include "fairdiv/efx_fpo.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"
#include "fairdiv/matching.hpp"
#include "fairdiv/rng.hpp"

namespace fairdiv {

namespace {

std::vector<int> all_ids(int count) {
  std::vector<int> ids(count);
  for (int i = 0; i < count; ++i) ids[i] = i;
  return ids;
}

std::vector<int> sorted_difference(std::vector<int> base, const std::vector<int>& remove) {
  std::vector<int> out;
  std::set_difference(base.begin(), base.end(), remove.begin(), remove.end(),
                      std::back_inserter(out));
  return out;
}

struct Run {
  const Instance& inst;
  Rational small, large;
  long long freeze_span;  // ⌊b/a − 1⌋ rounds of exclusion after a late large good

  std::vector<AgentStatus> status;
  std::vector<long long> frozen_left;
  std::vector<long long> reserved;  // c_i
  std::vector<std::vector<int>> bundles;
  std::vector<int> pool;    // N: agents still in the matching rounds
  std::vector<int> alive;   // M: unallocated goods
  long long cnt = 0;
  int round = 0;

  RunTrace* trace;

  explicit Run(const Instance& instance, RunTrace* tr) : inst(instance), trace(tr) {
    auto [a, b] = demand_bi_valued(instance);
    if (a == 0) throw precondition("ZeroLowValue: the a = 0 case reduces to binary utilities");
    small = a;
    large = b;
    freeze_span = static_cast<long long>(floor_div(b / a)) - 1;
    status.assign(inst.n, AgentStatus::Active);
    frozen_left.assign(inst.n, 0);
    reserved.assign(inst.n, 0);
    bundles.resize(inst.n);
    pool = all_ids(inst.n);
    alive = all_ids(inst.m());
    if (trace) {
      trace->grouped_round.assign(inst.n, -1);
      trace->ever_frozen.assign(inst.n, 0);
    }
  }

  int unfrozen_count() const {
    int count = 0;
    for (auto s : status) count += s != AgentStatus::Frozen;
    return count;
  }

  BipartiteState graph(const std::vector<int>& agents, const std::vector<int>& goods) const {
    return max_matching(build_large_value_graph(inst, agents, goods, large));
  }

  void give(int agent, int good, std::vector<char>& received) {
    bundles[agent].push_back(good);
    received[agent] = 1;
    if (trace) trace->rounds.back().matched.emplace_back(agent, good);
  }

  // One execution of the main loop body. `received` tracks the exactly-one-
  // good-per-unfrozen-round accounting.
  void play_round() {
    RunTrace::Round record;
    record.round = round;
    if (trace) trace->rounds.push_back(record);
    std::vector<char> received(inst.n, 0);

    UnmatchableGroup z = minimal_unmatchable_group(graph(pool, alive));

    // Good-swap refinement: while someone outside the group holds a good some
    // group member still values large, trade it for that agent's matched good
    // and rebuild the group.
    int swaps = 0;
    while (!z.group.empty()) {
      std::vector<char> in_group(inst.n, 0);
      for (int i : z.group) in_group[i] = 1;
      int swap_agent = -1, swap_good = -1;
      for (int i : pool) {  // lowest agent, then lowest good
        if (in_group[i]) continue;
        for (int g : bundles[i]) {
          bool wanted = false;
          for (int j : z.group)
            if (inst.util(j, g) == large) wanted = true;
          if (wanted && (swap_good == -1 || g < swap_good)) {
            swap_agent = i;
            swap_good = g;
          }
        }
        if (swap_agent != -1) break;
      }
      if (swap_agent == -1) break;
      require_internal(++swaps <= inst.n * inst.n + inst.n,
                       "good-swap loop exceeded its quadratic bound");

      std::vector<int> outside = sorted_difference(pool, z.group);
      std::vector<int> open = sorted_difference(alive, z.neighbors);
      auto pm = perfect_matching_between(graph(pool, alive), outside, open);
      int fresh = -1;
      for (auto [agent, good] : pm)
        if (agent == swap_agent) fresh = good;
      require_internal(fresh != -1, "swap agent missing from the perfect matching");

      std::erase(bundles[swap_agent], swap_good);
      bundles[swap_agent].push_back(fresh);
      alive = sorted_difference(std::move(alive), {fresh});
      alive.insert(std::lower_bound(alive.begin(), alive.end(), swap_good), swap_good);
      z = minimal_unmatchable_group(graph(pool, alive));
    }
    if (trace) trace->rounds.back().swap_iterations = swaps;

    if (z.group.empty()) {
      auto pm = perfect_matching_between(graph(pool, alive), pool, alive);
      std::vector<int> matched_goods;
      for (auto [agent, good] : pm) {
        give(agent, good, received);
        matched_goods.push_back(good);
      }
      std::sort(matched_goods.begin(), matched_goods.end());
      alive = sorted_difference(std::move(alive), matched_goods);
    } else {
      if (trace) {
        trace->rounds.back().group = z.group;
        trace->rounds.back().neighborhood = z.neighbors;
        for (int i : z.group) trace->grouped_round[i] = round;
      }
      // Group members compete for Γ(Z_t) in the reversed permutation order;
      // a recipient freezes, the rest turn quiet.
      std::vector<int> open_neighbors;
      for (int g : z.neighbors) open_neighbors.push_back(g);
      BipartiteState phase = build_large_value_graph(inst, z.group, open_neighbors, large);
      const std::vector<int>& perm = permutation;
      for (auto it = perm.rbegin(); it != perm.rend(); ++it) {
        int agent = *it;
        if (!std::binary_search(z.group.begin(), z.group.end(), agent)) continue;
        if (augment_to_good(phase, agent, open_neighbors)) {
          status[agent] = AgentStatus::Frozen;
          frozen_left[agent] = freeze_span;
          if (trace) {
            trace->rounds.back().frozen.push_back(agent);
            trace->ever_frozen[agent] = 1;
          }
        } else {
          status[agent] = AgentStatus::Quiet;
          if (trace) trace->rounds.back().quiet.push_back(agent);
        }
      }
      for (size_t a = 0; a < phase.agents.size(); ++a)
        if (phase.agent_match[a] != -1)
          give(phase.agents[a], phase.goods[phase.agent_match[a]], received);
      for (int g : phase.good_match)
        require_internal(g != -1, "a neighborhood good went unallocated in its group round");

      std::vector<int> outside = sorted_difference(pool, z.group);
      std::vector<int> open = sorted_difference(alive, z.neighbors);
      auto pm = perfect_matching_between(graph(pool, alive), outside, open);
      std::vector<int> matched_goods = z.neighbors;
      for (auto [agent, good] : pm) {
        give(agent, good, received);
        matched_goods.push_back(good);
      }
      std::sort(matched_goods.begin(), matched_goods.end());
      alive = sorted_difference(std::move(alive), matched_goods);
      pool = outside;
    }

    // End-of-round bookkeeping: quiet agents accrue a reserved small good.
    std::vector<char> virtual_good(inst.n, 0);
    for (int i = 0; i < inst.n; ++i) {
      if (status[i] != AgentStatus::Quiet) continue;
      cnt += 1;
      reserved[i] += 1;
      virtual_good[i] = 1;
    }
    // One good per unfrozen round, real or reserved (frozen agents: none).
    for (int i = 0; i < inst.n; ++i) {
      bool frozen_now = status[i] == AgentStatus::Frozen;
      bool frozen_before_round = frozen_now && !received[i];
      int receipts = received[i] + virtual_good[i];
      if (frozen_before_round)
        require_internal(receipts == 0, "a frozen agent received a good");
      else
        require_internal(receipts == 1, "an unfrozen agent did not receive exactly one good");
    }
    if (trace) trace->rounds.back().bundles_after = bundles;
  }

  std::vector<int> permutation;
};

}  // namespace

IntegralAllocation solve_efx_fpo(const Instance& inst, const std::vector<int>& perm,
                                 RunTrace* trace) {
  if (inst.m_bar() != 0)
    throw precondition("DivisiblePresent: this solver covers indivisible goods");
  if (!is_permutation_of(inst.n, perm)) throw precondition("perm must be a permutation of the agents");
  Run run(inst, trace);
  run.permutation = perm;

  while (true) {
    // Round boundary: thaw counters first, then test the guard.
    for (int i = 0; i < inst.n; ++i) {
      if (run.status[i] != AgentStatus::Frozen) continue;
      if (run.frozen_left[i] == 0)
        run.status[i] = AgentStatus::Quiet;
      else
        run.frozen_left[i] -= 1;
    }
    run.round += 1;
    if (static_cast<long long>(run.alive.size()) < run.unfrozen_count() + run.cnt) break;
    run.play_round();
  }

  // Final stage: the first |M| - cnt unfrozen agents in permutation order may
  // grab one more large good, re-shuffling the still-pooled agents' goods
  // along augmenting paths; everyone else banks one more reserve.
  std::vector<int> owner(inst.m(), -1);  // goods in M' only
  for (int i : run.pool)
    for (int g : run.bundles[i]) owner[g] = i;
  std::vector<char> free_good(inst.m(), 0);
  for (int g : run.alive) free_good[g] = 1;

  auto try_gain = [&](int agent) -> bool {
    std::vector<char> visited(inst.m(), 0);
    auto dfs = [&](auto&& self, int who) -> bool {
      for (int g = 0; g < inst.m(); ++g) {
        if (visited[g] || inst.util(who, g) != run.large) continue;
        if (!free_good[g] && owner[g] == -1) continue;  // not part of M'
        visited[g] = 1;
        if (free_good[g]) {
          free_good[g] = 0;
          owner[g] = who;
          return true;
        }
        int current = owner[g];
        if (self(self, current)) {
          owner[g] = who;
          return true;
        }
      }
      return false;
    };
    return dfs(dfs, agent);
  };

  long long budget = static_cast<long long>(run.alive.size()) - run.cnt;
  require_internal(budget >= 0, "reserved goods exceed the remaining supply");
  for (int agent : perm) {
    if (budget == 0) break;
    if (run.status[agent] == AgentStatus::Frozen) continue;
    budget -= 1;
    if (try_gain(agent)) {
      if (trace) trace->final_stage.emplace_back(agent, 1);
    } else {
      run.reserved[agent] += 1;
      if (trace) trace->final_stage.emplace_back(agent, -1);
    }
  }

  // Rebuild pooled agents' bundles from the ownership map, keep the others.
  for (int i : run.pool) run.bundles[i].clear();
  for (int g = 0; g < inst.m(); ++g)
    if (owner[g] != -1) run.bundles[owner[g]].push_back(g);

  // Market clearing: each agent takes exactly c_i of the leftover goods, in
  // permutation order, goods ascending. Every such good must be small for its
  // recipient; the proofs rely on it, so we check rather than assume.
  std::vector<int> leftovers;
  for (int g = 0; g < inst.m(); ++g)
    if (free_good[g]) leftovers.push_back(g);
  long long reserved_total = 0;
  for (int i = 0; i < inst.n; ++i) reserved_total += run.reserved[i];
  require_internal(static_cast<long long>(leftovers.size()) == reserved_total,
                   "market clearing found a supply/reserve mismatch");
  size_t cursor = 0;
  for (int agent : perm) {
    for (long long k = 0; k < run.reserved[agent]; ++k) {
      int g = leftovers[cursor++];
      require_internal(inst.util(agent, g) == run.small,
                       "market clearing handed out a large good");
      run.bundles[agent].push_back(g);
      if (trace) trace->market_clear.emplace_back(agent, g);
    }
  }

  IntegralAllocation alloc = IntegralAllocation::empty(inst);
  alloc.bundles = run.bundles;
  alloc.sort_bundles();
  if (trace) trace->reserved.assign(run.reserved.begin(), run.reserved.end());
  return alloc;
}

IntegralAllocation solve_efx_fpo_seeded(const Instance& inst, std::uint64_t seed, RunTrace* trace) {
  SplitMix64 rng(seed);
  return solve_efx_fpo(inst, random_permutation(inst.n, rng), trace);
}

}  // namespace fairdiv

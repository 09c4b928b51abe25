#include "fairdiv/mixed_bobw.hpp"

#include <algorithm>

#include "fairdiv/errors.hpp"
#include "fairdiv/matching.hpp"
#include "fairdiv/rng.hpp"
#include "fairdiv/water_filling.hpp"

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

// Restriction of the instance to a subset of its indivisible goods (divisible
// goods kept). good_map[k] = original id of restricted good k.
Instance restrict_goods(const Instance& inst, const std::vector<int>& keep) {
  Instance out;
  out.n = inst.n;
  for (int g : keep) out.indivisible.push_back(inst.indivisible[g]);
  out.divisible = inst.divisible;
  out.utilities.resize(inst.n);
  for (int i = 0; i < inst.n; ++i) {
    for (int g : keep) out.utilities[i].push_back(inst.util(i, g));
    for (int k = 0; k < inst.m_bar(); ++k) out.utilities[i].push_back(inst.util_divisible(i, k));
  }
  out.bi_values = inst.bi_values;  // entries only got fewer
  return out;
}

}  // namespace

std::vector<int> ReduceResult::residual() const {
  std::vector<int> out = removed_goods;
  out.insert(out.end(), leftover_goods.begin(), leftover_goods.end());
  std::sort(out.begin(), out.end());
  return out;
}

IntegralAllocation solve_small_m(const Instance& inst, const std::vector<int>& perm) {
  if (inst.m() > inst.n) throw precondition("TooManyGoods: Round-Robin phase needs m <= n");
  if (!is_permutation_of(inst.n, perm)) throw precondition("perm must be a permutation of the agents");
  MergedDivisibles merge = merge_divisibles(inst);

  std::vector<std::vector<int>> bundles(inst.n);
  std::vector<char> taken(inst.m(), 0);
  int left = inst.m();
  for (int agent : perm) {
    if (left == 0) break;
    int best = -1;
    for (int g = 0; g < inst.m(); ++g) {
      if (taken[g]) continue;
      if (best == -1 || inst.util(agent, g) > inst.util(agent, best)) best = g;
    }
    taken[best] = 1;
    --left;
    bundles[agent].push_back(best);
  }

  return expand_merged(merge, water_fill(merge.merged, bundles));
}

ReduceResult reduce_instance(const Instance& inst) {
  const Rational large = demand_bi_valued(inst).second;
  const int n = inst.n;

  ReduceResult res;
  res.partial.resize(n);
  std::vector<int> alive = all_ids(inst.m());
  std::vector<int> unmatched_pool = all_ids(n);  // N \ T
  long long cnt = 0;

  while (static_cast<long long>(alive.size()) >= cnt + n) {
    BipartiteState graph =
        max_matching(build_large_value_graph(inst, unmatched_pool, alive, large));
    UnmatchableGroup z = minimal_unmatchable_group(graph);

    if (!z.group.empty()) {
      res.unmatchable_agents.insert(res.unmatchable_agents.end(), z.group.begin(), z.group.end());
      std::sort(res.unmatchable_agents.begin(), res.unmatchable_agents.end());
      res.removed_goods.insert(res.removed_goods.end(), z.neighbors.begin(), z.neighbors.end());
      std::sort(res.removed_goods.begin(), res.removed_goods.end());
      alive = sorted_difference(std::move(alive), z.neighbors);
      unmatched_pool = sorted_difference(std::move(unmatched_pool), z.group);
    }
    if (static_cast<long long>(alive.size()) < cnt + n) break;

    BipartiteState round =
        max_matching(build_large_value_graph(inst, unmatched_pool, alive, large));
    auto matching = perfect_matching_between(round, unmatched_pool, alive);
    std::vector<int> matched_goods;
    for (auto [agent, good] : matching) {
      res.partial[agent].push_back(good);
      matched_goods.push_back(good);
    }
    std::sort(matched_goods.begin(), matched_goods.end());
    alive = sorted_difference(std::move(alive), matched_goods);
    cnt += static_cast<long long>(res.unmatchable_agents.size());
    res.rounds += 1;
  }

  // Top up every bundle to exactly `rounds` goods; these fillers are low-value
  // to their recipients because their large goods were removed with Y.
  size_t cursor = 0;
  for (int i = 0; i < n; ++i) {
    while (static_cast<int>(res.partial[i].size()) < res.rounds) {
      require_internal(cursor < alive.size(), "reduction ran out of top-up goods");
      res.partial[i].push_back(alive[cursor++]);
    }
    std::sort(res.partial[i].begin(), res.partial[i].end());
  }
  res.leftover_goods.assign(alive.begin() + cursor, alive.end());
  return res;
}

IntegralAllocation solve_mid_m(const Instance& inst, const std::vector<int>& perm) {
  const int n = inst.n, m = inst.m();
  if (m <= n || m > 2 * n - 2) throw precondition("WrongRange: solver expects n < m <= 2n-2");
  if (!is_permutation_of(n, perm)) throw precondition("perm must be a permutation of the agents");
  const Rational large = demand_bi_valued(inst).second;
  MergedDivisibles merge = merge_divisibles(inst);

  std::vector<int> agents = all_ids(n), goods = all_ids(m);

  // Step 1: split off the minimal unmatchable group.
  BipartiteState graph = max_matching(build_large_value_graph(inst, agents, goods, large));
  UnmatchableGroup group = minimal_unmatchable_group(graph);
  const std::vector<int>& unmatchable = group.group;
  std::vector<char> in_group(n, 0);
  for (int i : unmatchable) in_group[i] = 1;
  std::vector<char> two_goods(n, 0);  // π[:m-n] receives a second good
  for (int k = 0; k < m - n; ++k) two_goods[perm[k]] = 1;

  std::vector<std::vector<int>> bundles(n);
  std::vector<char> taken(m, 0);
  auto take = [&](int agent, int good) {
    require_internal(good >= 0 && !taken[good], "mid-range solver double-allocated a good");
    taken[good] = 1;
    bundles[agent].push_back(good);
  };

  // Step 2, first phase: a perfect matching for N \ T on M \ Y, fixed
  // independently of the permutation.
  std::vector<int> matchable = sorted_difference(all_ids(n), unmatchable);
  std::vector<int> open_goods = sorted_difference(all_ids(m), group.neighbors);
  for (auto [agent, good] : perfect_matching_between(graph, matchable, open_goods)) take(agent, good);

  // Step 2, second phase: priority agents outside T pick their best leftover.
  for (int k = 0; k < m - n; ++k) {
    int agent = perm[k];
    if (in_group[agent]) continue;
    int best = -1;
    for (int g = 0; g < m; ++g) {
      if (taken[g]) continue;
      if (best == -1 || inst.util(agent, g) > inst.util(agent, best)) best = g;
    }
    take(agent, best);
  }

  // Step 3, first phase: match the group into its neighborhood with
  // augmenting paths, in permutation order; the skipped agents take an
  // arbitrary (lowest-id) good afterwards.
  std::vector<int> free_neighbors;
  for (int g : group.neighbors)
    if (!taken[g]) free_neighbors.push_back(g);
  BipartiteState phase = build_large_value_graph(inst, unmatchable, free_neighbors, large);
  std::vector<int> skipped;
  for (int agent : perm) {
    if (!in_group[agent]) continue;
    if (!augment_to_good(phase, agent, free_neighbors)) skipped.push_back(agent);
  }
  for (size_t a = 0; a < phase.agents.size(); ++a)
    if (phase.agent_match[a] != -1) take(phase.agents[a], phase.goods[phase.agent_match[a]]);
  for (int agent : skipped) {
    int lowest = -1;
    for (int g = 0; g < m && lowest < 0; ++g)
      if (!taken[g]) lowest = g;
    take(agent, lowest);
  }

  // Step 3, second phase: priority agents inside T take one more good.
  for (int k = 0; k < m - n; ++k) {
    int agent = perm[k];
    if (!in_group[agent]) continue;
    int lowest = -1;
    for (int g = 0; g < m && lowest < 0; ++g)
      if (!taken[g]) lowest = g;
    take(agent, lowest);
  }
  require_internal(std::count(taken.begin(), taken.end(), 1) == m,
                   "mid-range solver left goods unallocated");

  // Step 4.
  return expand_merged(merge, water_fill(merge.merged, bundles));
}

IntegralAllocation solve_prop_efm(const Instance& inst, const std::vector<int>& perm) {
  if (inst.m() <= inst.n) return solve_small_m(inst, perm);
  ReduceResult red = reduce_instance(inst);
  return solve_prop_efm_reduced(inst, red, perm);
}

IntegralAllocation solve_prop_efm_reduced(const Instance& inst, const ReduceResult& red,
                                          const std::vector<int>& perm) {
  if (inst.m() <= inst.n) return solve_small_m(inst, perm);
  std::vector<int> residual = red.residual();
  Instance rest = restrict_goods(inst, residual);
  IntegralAllocation sub = static_cast<int>(residual.size()) <= inst.n
                               ? solve_small_m(rest, perm)
                               : solve_mid_m(rest, perm);

  IntegralAllocation out = IntegralAllocation::empty(inst);
  for (int i = 0; i < inst.n; ++i) {
    out.bundles[i] = red.partial[i];
    for (int g : sub.bundles[i]) out.bundles[i].push_back(residual[g]);
    out.fractions[i] = sub.fractions[i];
  }
  out.sort_bundles();
  return out;
}

IntegralAllocation solve_prop_efm_seeded(const Instance& inst, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return solve_prop_efm(inst, random_permutation(inst.n, rng));
}

}  // namespace fairdiv

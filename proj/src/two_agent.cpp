#include "fairdiv/two_agent.hpp"

#include <algorithm>
#include <array>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

Rational value_of(const std::vector<Rational>& u, const std::vector<int>& items) {
  Rational total = 0;
  for (int g : items) total += u[g];
  return total;
}

bool efx_one_way(const std::vector<Rational>& u, const Rational& own, const std::vector<int>& other) {
  Rational total = value_of(u, other);
  for (int g : other)
    if (own < total - u[g]) return false;
  return true;
}

bool efx_pair_under(const TwoBundleSplit& split, const std::vector<Rational>& u) {
  Rational low = value_of(u, split.low), high = value_of(u, split.high);
  return efx_one_way(u, low, split.high) && efx_one_way(u, high, split.low);
}

struct Alg1Result {
  bool singleton = false;
  int owner = 0;  // which agent's split is realized
  std::array<TwoBundleSplit, 2> splits;
  int moves_total = 0;
  int max_call_moves = 0;
};

/** Algorithm: maintain per-agent EFX splits, return an outright EF one when it
 *  appears, otherwise re-balance the split with the larger difference from the
 *  other agent's split until neither improves. */
Alg1Result run_alg1(int item_count, const std::array<std::vector<Rational>, 2>& u) {
  Alg1Result res;
  std::vector<int> all(item_count);
  for (int g = 0; g < item_count; ++g) all[g] = g;
  auto track = [&res](int moves) {
    res.moves_total += moves;
    res.max_call_moves = std::max(res.max_call_moves, moves);
  };
  for (int i = 0; i < 2; ++i) {
    int moves = 0;
    res.splits[i] = local_search({}, all, u[i], &moves);
    track(moves);
  }

  auto ef_owner = [&]() -> int {
    for (int i = 0; i < 2; ++i) {
      const auto& s = res.splits[i];
      if (value_of(u[i], s.low) == value_of(u[i], s.high)) return i;
      if (value_of(u[1 - i], s.low) >= value_of(u[1 - i], s.high)) return i;
    }
    return -1;
  };
  auto diff_under = [&](int viewer, int split_owner) {
    const auto& s = res.splits[split_owner];
    return value_of(u[viewer], s.high) - value_of(u[viewer], s.low);
  };

  if (int i = ef_owner(); i >= 0) {
    res.singleton = true;
    res.owner = i;
    return res;
  }

  int guard = 4 * item_count + 8;
  while (true) {
    int pick = -1;
    for (int i = 0; i < 2 && pick < 0; ++i)
      if (diff_under(1 - i, i) < diff_under(1 - i, 1 - i)) pick = i;
    if (pick < 0) break;
    require_internal(guard-- > 0, "two-agent re-balancing loop exceeded its bound");

    int moves = 0;
    res.splits[1 - pick] = local_search(res.splits[pick].low, res.splits[pick].high, u[1 - pick], &moves);
    track(moves);

    if (int j = ef_owner(); j >= 0) {
      res.singleton = true;
      res.owner = j;
      return res;
    }
    if (efx_pair_under(res.splits[1 - pick], u[pick])) {
      res.splits[pick] = res.splits[1 - pick];
      break;
    }
  }
  return res;
}

}  // namespace

TwoBundleSplit local_search(std::vector<int> a, std::vector<int> b,
                            const std::vector<Rational>& u, int* moves) {
  Rational va = value_of(u, a), vb = value_of(u, b);
  if (va > vb) {
    std::swap(a, b);
    std::swap(va, vb);
  }
  int count = 0;
  while (true) {
    // Most valuable good of B that still fits under u(B); ties to lowest id.
    int best = -1;
    size_t best_pos = 0;
    for (size_t pos = 0; pos < b.size(); ++pos) {
      int g = b[pos];
      if (va + u[g] >= vb) continue;
      if (best == -1 || u[g] > u[best]) {
        best = g;
        best_pos = pos;
      }
    }
    if (best == -1) break;
    b.erase(b.begin() + best_pos);
    a.push_back(best);
    va += u[best];
    vb -= u[best];
    ++count;
    if (va > vb) {
      std::swap(a, b);
      std::swap(va, vb);
    }
  }
  if (moves) *moves = count;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return TwoBundleSplit{std::move(a), std::move(b)};
}

namespace {

// Realizes a split: the picker takes her preferred bundle, ties toward `low`
// (the side the split's owner values weakly less, which keeps the owner EFX).
IntegralAllocation realize_split(const Instance& inst, const TwoBundleSplit& split, int picker,
                                 const std::array<std::vector<Rational>, 2>& u, int divisible_item) {
  bool picker_takes_high = value_of(u[picker], split.high) > value_of(u[picker], split.low);
  const std::vector<int>& to_picker = picker_takes_high ? split.high : split.low;
  const std::vector<int>& to_other = picker_takes_high ? split.low : split.high;

  IntegralAllocation alloc = IntegralAllocation::empty(inst);
  auto place = [&](int agent, const std::vector<int>& items) {
    for (int g : items) {
      if (g == divisible_item)
        alloc.fractions[agent][0] = 1;
      else
        alloc.bundles[agent].push_back(g);
    }
  };
  place(picker, to_picker);
  place(1 - picker, to_other);
  alloc.sort_bundles();
  return alloc;
}

}  // namespace

RandomizedAllocation solve_two_agent_efx(const Instance& inst, TwoAgentStats* stats) {
  if (inst.n != 2) throw precondition("WrongAgentCount: two-agent solver needs n = 2");
  if (inst.m_bar() != 0) throw precondition("DivisiblePresent: use the mixed-goods solver");
  std::array<std::vector<Rational>, 2> u = {inst.utilities[0], inst.utilities[1]};
  Alg1Result res = run_alg1(inst.m(), u);
  if (stats) *stats = {res.moves_total, res.max_call_moves};

  RandomizedAllocation lottery;
  if (res.singleton) {
    lottery.support.emplace_back(Rational(1), realize_split(inst, res.splits[res.owner], 1 - res.owner, u, -1));
  } else {
    for (int i = 0; i < 2; ++i)
      lottery.support.emplace_back(Rational(1) / 2, realize_split(inst, res.splits[i], 1 - i, u, -1));
  }
  return lottery;
}

RandomizedAllocation solve_two_agent_efm(const Instance& inst, TwoAgentStats* stats) {
  if (inst.n != 2) throw precondition("WrongAgentCount: two-agent solver needs n = 2");
  MergedDivisibles merge = merge_divisibles(inst);
  const Instance& merged = merge.merged;
  const int d_item = merged.m();  // d participates as one more item
  std::array<std::vector<Rational>, 2> u = {merged.utilities[0], merged.utilities[1]};
  Alg1Result res = run_alg1(d_item + 1, u);
  if (stats) *stats = {res.moves_total, res.max_call_moves};

  RandomizedAllocation lottery;
  if (res.singleton) {
    lottery.support.emplace_back(Rational(1), realize_split(merged, res.splits[res.owner], 1 - res.owner, u, d_item));
    return expand_merged(merge, lottery);
  }

  // Both splits are strictly unbalanced here. If d sits in some agent's
  // heavier bundle, transferring an exact fraction of it equalizes her two
  // bundles and the other agent's pick makes the allocation EF outright.
  for (int i = 0; i < 2; ++i) {
    const auto& split = res.splits[i];
    if (!std::count(split.high.begin(), split.high.end(), d_item)) continue;
    const Rational& d_value = u[i][d_item];
    if (d_value == 0) continue;
    Rational low = value_of(u[i], split.low), high = value_of(u[i], split.high);
    Rational alpha = (high - low) / (2 * d_value);
    require_internal(alpha > 0 && alpha <= 1, "divisible transfer fraction out of range");

    // light: split.low plus α of d; heavy: split.high minus that fraction.
    auto build = [&](IntegralAllocation& alloc, int agent, const std::vector<int>& items,
                     const Rational& frac) {
      for (int g : items)
        if (g != d_item) alloc.bundles[agent].push_back(g);
      alloc.fractions[agent][0] = frac;
    };
    int picker = 1 - i;
    Rational pick_light = value_of(u[picker], split.low) + alpha * u[picker][d_item];
    Rational pick_heavy = value_of(u[picker], split.high) - alpha * u[picker][d_item];
    IntegralAllocation alloc = IntegralAllocation::empty(merged);
    if (pick_heavy > pick_light) {
      build(alloc, picker, split.high, 1 - alpha);
      build(alloc, i, split.low, alpha);
    } else {
      build(alloc, picker, split.low, alpha);
      build(alloc, i, split.high, 1 - alpha);
    }
    alloc.sort_bundles();
    lottery.support.emplace_back(Rational(1), alloc);
    return expand_merged(merge, lottery);
  }

  // d lies in the lighter bundle on both sides: the half-half mixture is
  // ex-ante EF and every support element is EFXM.
  for (int i = 0; i < 2; ++i)
    lottery.support.emplace_back(Rational(1) / 2, realize_split(merged, res.splits[i], 1 - i, u, d_item));
  return expand_merged(merge, lottery);
}

}  // namespace fairdiv

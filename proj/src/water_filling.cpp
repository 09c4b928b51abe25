#include "fairdiv/water_filling.hpp"

#include <algorithm>

#include "fairdiv/checkers.hpp"
#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

struct PourState {
  int n;
  std::vector<std::vector<int>> piles;     // indivisible part, moved whole
  std::vector<Rational> share;             // poured amount per holder
  std::vector<std::vector<Rational>> val;  // val[i][j] = u_i(pile held by j)
  std::vector<Rational> d_value;           // u_i(d)

  bool weak_pref(int i, int j) const { return val[i][j] >= val[i][i]; }
  bool strict_pref(int i, int j) const { return val[i][j] > val[i][i]; }

  // Every agent on the cycle takes her successor's pile; succ maps each cycle
  // member to the holder she takes from.
  void rotate(const std::vector<int>& cycle) {
    auto old_piles = piles;
    auto old_share = share;
    auto old_val = val;
    for (size_t t = 0; t < cycle.size(); ++t) {
      int from = cycle[(t + 1) % cycle.size()], to = cycle[t];
      piles[to] = old_piles[from];
      share[to] = old_share[from];
      for (int i = 0; i < n; ++i) val[i][to] = old_val[i][from];
    }
  }

  // Finds a weak-preference cycle through at least one strict edge and
  // rotates it. Deterministic: lowest strict edge first, DFS in ascending
  // holder order. Returns false when none remains.
  bool rotate_once() {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s == t || !strict_pref(s, t)) continue;
        // Close the cycle: a weak-preference path t ⇝ s.
        std::vector<int> parent(n, -1);
        std::vector<int> stack{t};
        std::vector<char> seen(n, 0);
        seen[t] = 1;
        while (!stack.empty()) {
          int cur = stack.back();
          stack.pop_back();
          if (cur == s) break;
          for (int nxt = 0; nxt < n; ++nxt) {
            if (seen[nxt] || nxt == cur || !weak_pref(cur, nxt)) continue;
            seen[nxt] = 1;
            parent[nxt] = cur;
            stack.push_back(nxt);
          }
        }
        if (!seen[s]) continue;
        std::vector<int> cycle;  // s, t, ..., path back to s
        for (int cur = s; cur != t; cur = parent[cur]) cycle.push_back(cur);
        cycle.push_back(t);
        std::reverse(cycle.begin() + 1, cycle.end());
        rotate(cycle);
        return true;
      }
    }
    return false;
  }
};

}  // namespace

IntegralAllocation water_fill(const Instance& inst, const std::vector<std::vector<int>>& ef1_bundles) {
  if (inst.m_bar() != 1) throw precondition("water_fill expects a single merged divisible good");
  if (static_cast<int>(ef1_bundles.size()) != inst.n)
    throw precondition("water_fill needs one bundle per agent");
  {
    IntegralAllocation base = IntegralAllocation::empty(inst);
    base.bundles = ef1_bundles;
    base.sort_bundles();
    if (!check_ef1(inst, base).holds) throw precondition("NotEF1: water_fill needs an EF1 base");
  }

  const int n = inst.n;
  PourState st;
  st.n = n;
  st.piles = ef1_bundles;
  st.share.assign(n, Rational(0));
  st.d_value.resize(n);
  bool anyone_values_d = false;
  for (int i = 0; i < n; ++i) {
    st.d_value[i] = inst.util_divisible(i, 0);
    if (st.d_value[i] > 0) anyone_values_d = true;
  }

  IntegralAllocation out = IntegralAllocation::empty(inst);
  st.val.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) st.val[i][j] = inst.bundle_value(i, st.piles[j]);

  Rational remaining = 1;
  int guard = 8 * n * n * n + 32 * n + 32;
  while (true) {
    require_internal(guard-- > 0, "water filling exceeded its event bound");
    while (st.rotate_once()) {
      require_internal(guard-- > 0, "water filling exceeded its rotation bound");
    }
    if (remaining == 0) break;

    // Non-envied piles, then drop any pile tied from a non-receiving agent who
    // values d (pouring into it would create strict envy immediately).
    std::vector<char> receiving(n, 0);
    for (int j = 0; j < n; ++j) {
      receiving[j] = 1;
      for (int i = 0; i < n; ++i)
        if (i != j && st.strict_pref(i, j)) receiving[j] = 0;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int j = 0; j < n; ++j) {
        if (!receiving[j]) continue;
        for (int i = 0; i < n; ++i) {
          if (i == j || receiving[i] || st.d_value[i] == 0) continue;
          if (st.val[i][i] == st.val[i][j]) {
            receiving[j] = 0;
            changed = true;
            break;
          }
        }
      }
    }
    int pool = static_cast<int>(std::count(receiving.begin(), receiving.end(), 1));
    require_internal(pool > 0, "water filling found no pile eligible to receive");

    if (!anyone_values_d) {
      // Worthless divisible: park all of it on the first non-envied pile.
      // A positive fraction still triggers the mixed checker's full-EF branch,
      // so the landing pile must be non-envied even at value zero.
      for (int j = 0; j < n; ++j)
        if (receiving[j]) {
          st.share[j] += remaining;
          break;
        }
      remaining = 0;
      break;
    }

    Rational step = remaining / pool;
    for (int i = 0; i < n; ++i) {
      if (st.d_value[i] == 0) continue;
      if (!receiving[i]) {
        // Outside viewer: pouring erodes her lead over every receiving pile.
        for (int j = 0; j < n; ++j) {
          if (i == j || !receiving[j]) continue;
          Rational gap = st.val[i][i] - st.val[i][j];
          require_internal(gap > 0, "blocked tie survived the eligibility fixpoint");
          step = std::min(step, gap / st.d_value[i]);
        }
      }
      if (receiving[i]) {
        // Receiving viewer catching up to a stalled pile she still envies.
        for (int j = 0; j < n; ++j) {
          if (receiving[j] || st.val[i][j] <= st.val[i][i]) continue;
          step = std::min(step, (st.val[i][j] - st.val[i][i]) / st.d_value[i]);
        }
      }
    }
    require_internal(step > 0, "water filling stalled");
    for (int j = 0; j < n; ++j) {
      if (!receiving[j]) continue;
      st.share[j] += step;
      remaining -= step;
      for (int i = 0; i < n; ++i) st.val[i][j] += step * st.d_value[i];
    }
  }

  out.bundles = st.piles;
  out.sort_bundles();
  for (int j = 0; j < n; ++j) out.fractions[j][0] = st.share[j];
  return out;
}

}  // namespace fairdiv

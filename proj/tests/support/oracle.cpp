#include "support/oracle.hpp"

#include <algorithm>

namespace oracle {

Rational value_of(const Instance& inst, const IntegralAllocation& alloc, int viewer, int owner) {
  Rational total = 0;
  for (int g : alloc.bundles[owner]) total += inst.utilities[viewer][g];
  for (int k = 0; k < inst.m_bar(); ++k)
    total += alloc.fractions[owner][k] * inst.utilities[viewer][inst.m() + k];
  return total;
}

bool ef(const Instance& inst, const IntegralAllocation& alloc) {
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (value_of(inst, alloc, i, i) < value_of(inst, alloc, i, j)) return false;
  return true;
}

bool prop(const Instance& inst, const IntegralAllocation& alloc) {
  for (int i = 0; i < inst.n; ++i) {
    Rational everything = 0;
    for (const Rational& u : inst.utilities[i]) everything += u;
    if (inst.n * value_of(inst, alloc, i, i) < everything) return false;
  }
  return true;
}

namespace {

enum class Quantifier { Some, Every };

// "after removing some/every good g from M_j the envy is gone"
bool up_to_good(const Instance& inst, const IntegralAllocation& alloc, int i, int j, Quantifier q) {
  Rational own = value_of(inst, alloc, i, i);
  bool all_ok = true, some_ok = false;
  for (int g : alloc.bundles[j]) {
    Rational rest = 0;
    for (int h : alloc.bundles[j])
      if (h != g) rest += inst.utilities[i][h];
    if (own >= rest)
      some_ok = true;
    else
      all_ok = false;
  }
  return q == Quantifier::Some ? some_ok : all_ok;
}

bool up_to_family(const Instance& inst, const IntegralAllocation& alloc, Quantifier q) {
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) {
      if (i == j || alloc.bundles[j].empty()) continue;
      if (!up_to_good(inst, alloc, i, j, q)) return false;
    }
  return true;
}

bool mixed_family(const Instance& inst, const IntegralAllocation& alloc, Quantifier q) {
  for (int i = 0; i < inst.n; ++i)
    for (int j = 0; j < inst.n; ++j) {
      if (i == j) continue;
      bool divisible = false;
      for (int k = 0; k < inst.m_bar(); ++k)
        if (alloc.fractions[j][k] > 0) divisible = true;
      if (!divisible && !alloc.bundles[j].empty()) {
        if (!up_to_good(inst, alloc, i, j, q)) return false;
      } else {
        if (value_of(inst, alloc, i, i) < value_of(inst, alloc, i, j)) return false;
      }
    }
  return true;
}

}  // namespace

bool ef1(const Instance& inst, const IntegralAllocation& alloc) {
  return up_to_family(inst, alloc, Quantifier::Some);
}

bool efx(const Instance& inst, const IntegralAllocation& alloc) {
  return up_to_family(inst, alloc, Quantifier::Every);
}

bool efm(const Instance& inst, const IntegralAllocation& alloc) {
  return mixed_family(inst, alloc, Quantifier::Some);
}

bool efxm(const Instance& inst, const IntegralAllocation& alloc) {
  return mixed_family(inst, alloc, Quantifier::Every);
}

bool integral_domination_exists(const Instance& inst, const IntegralAllocation& alloc) {
  const int n = inst.n, m = inst.m();
  std::vector<Rational> baseline(n);
  for (int i = 0; i < n; ++i) baseline[i] = value_of(inst, alloc, i, i);
  std::vector<int> assign(m, 0);
  while (true) {
    std::vector<Rational> value(n, Rational(0));
    for (int g = 0; g < m; ++g) value[assign[g]] += inst.utilities[assign[g]][g];
    bool weak = true, strict = false;
    for (int i = 0; i < n; ++i) {
      if (value[i] < baseline[i]) weak = false;
      if (value[i] > baseline[i]) strict = true;
    }
    if (weak && strict) return true;
    int k = m - 1;
    for (; k >= 0; --k) {
      if (++assign[k] < n) break;
      assign[k] = 0;
    }
    if (k < 0) return false;
  }
}

int brute_force_matching_size(const std::vector<std::vector<int>>& adj, int goods) {
  int best = 0;
  std::vector<char> used(goods, 0);
  auto rec = [&](auto&& self, size_t agent, int size) -> void {
    if (agent == adj.size()) {
      best = std::max(best, size);
      return;
    }
    self(self, agent + 1, size);  // leave this agent unmatched
    for (int g : adj[agent]) {
      if (used[g]) continue;
      used[g] = 1;
      self(self, agent + 1, size + 1);
      used[g] = 0;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace oracle

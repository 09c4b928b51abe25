#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fairdiv/rational.hpp"

namespace fairdiv {

/**
 * A fair-division instance: n agents, m indivisible goods, m̄ homogeneous
 * divisible goods, and an additive utility matrix over all of them.
 *
 * Utility columns are ordered indivisible-first, then divisible. All values
 * are immutable after validation; instances are safe to share across threads.
 */
struct Instance {
  int n = 0;
  std::vector<std::string> indivisible;  // good id = position
  std::vector<std::string> divisible;
  std::vector<std::vector<Rational>> utilities;  // n x (m + m_bar)

  // Present when every entry lies in {a, b}. a == b marks the degenerate
  // single-valued case; binary means (0, 1).
  std::optional<std::pair<Rational, Rational>> bi_values;

  int m() const { return static_cast<int>(indivisible.size()); }
  int m_bar() const { return static_cast<int>(divisible.size()); }

  const Rational& util(int agent, int good) const { return utilities[agent][good]; }
  const Rational& util_divisible(int agent, int k) const { return utilities[agent][m() + k]; }

  bool is_bi_valued() const { return bi_values.has_value(); }
  bool is_binary() const {
    return bi_values && bi_values->first == 0 && bi_values->second == 1;
  }

  Rational bundle_value(int agent, const std::vector<int>& goods) const;
  Rational total_value(int agent) const;  // u_i(M ∪ D)
};

// Checks every Instance invariant and records the bi-valued / binary tag by
// scanning the utility matrix. Throws on negative utilities, an empty agent
// set, or dimension mismatches.
Instance validate_instance(Instance raw);

// Throws unless the instance carries a bi-valued tag (at most two distinct
// utility values). Returns (a, b), the small and large value.
std::pair<Rational, Rational> demand_bi_valued(const Instance& inst);

/**
 * Reduction of all divisible goods to a single homogeneous good d with
 * u_i(d) = u_i(D). A fraction ε of d expands back to a fraction ε of every
 * original divisible good.
 */
struct MergedDivisibles {
  Instance merged;     // exactly one divisible good, named "d"
  int original_m_bar;  // width of the expanded fraction vectors
};

MergedDivisibles merge_divisibles(const Instance& inst);

}  // namespace fairdiv

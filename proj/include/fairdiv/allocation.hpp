#pragma once

#include <compare>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

/**
 * An integral allocation: per agent, a set of indivisible good ids plus a
 * fraction of every divisible good. Indivisible ids are kept sorted so that
 * equality and ordering are structural.
 */
struct IntegralAllocation {
  std::vector<std::vector<int>> bundles;        // n x (sorted good ids)
  std::vector<std::vector<Rational>> fractions; // n x m_bar, each in [0, 1]

  static IntegralAllocation empty(const Instance& inst);

  int agents() const { return static_cast<int>(bundles.size()); }
  bool has_divisible_share(int agent) const;

  // u_viewer(A_owner), the full mixed bundle.
  Rational bundle_value(const Instance& inst, int viewer, int owner) const;

  void sort_bundles();

  bool operator==(const IntegralAllocation&) const = default;
  std::weak_ordering operator<=>(const IntegralAllocation&) const = default;
};

struct FractionalAllocation {
  std::vector<std::vector<Rational>> matrix;  // n x (m + m_bar)

  Rational row_value(const Instance& inst, int viewer, int row) const;
};

FractionalAllocation to_fractional(const Instance& inst, const IntegralAllocation& alloc);

/** A finite lottery over integral allocations; probabilities sum to one. */
struct RandomizedAllocation {
  std::vector<std::pair<Rational, IntegralAllocation>> support;
};

// X = Σ_j p_j · X_j, exact.
FractionalAllocation expected_allocation(const Instance& inst, const RandomizedAllocation& lottery);

// Every indivisible good assigned exactly once and every divisible column sums to 1.
bool is_complete(const Instance& inst, const IntegralAllocation& alloc);

// Structural sanity: ids in range, no good assigned twice, fractions in [0,1]
// with column sums at most 1. Throws on violation.
void validate_allocation(const Instance& inst, const IntegralAllocation& alloc);

void validate_lottery(const Instance& inst, const RandomizedAllocation& lottery);

// Expands an allocation over a merged-divisible instance back to the original
// divisible goods: a fraction ε of d becomes ε of every original good.
IntegralAllocation expand_merged(const MergedDivisibles& merge, const IntegralAllocation& alloc);

RandomizedAllocation expand_merged(const MergedDivisibles& merge, const RandomizedAllocation& lottery);

}  // namespace fairdiv

#pragma once

#include <vector>

#include "fairdiv/allocation.hpp"
#include "fairdiv/checkers.hpp"

namespace fairdiv {

/**
 * Exact rational simplex for `max c·x  s.t.  A x = b, x >= 0`, started from a
 * caller-supplied basic feasible basis. Bland's rule on both the entering and
 * leaving choice, so degeneracy cannot cycle. Sizes here are desk scale; no
 * attempt at numerical cleverness, every pivot is exact.
 */
struct LpProblem {
  std::vector<std::vector<Rational>> a;  // rows x cols
  std::vector<Rational> b;               // rows, must be >= 0 under the basis
  std::vector<Rational> c;               // cols
  std::vector<int> basis;                // one basic column per row
};

struct LpSolution {
  Rational objective;
  std::vector<Rational> x;
};

LpSolution simplex_maximize(LpProblem problem);

// Definition-level fPO test: an exact LP searching for a fractional
// reallocation that weakly improves every agent and strictly improves the
// total. Holds iff the optimum equals the allocation's own welfare; failures
// carry the dominating allocation. Deliberately independent of the
// Fisher-market certificate path.
PropertyReport check_fpo_lp(const Instance& inst, const IntegralAllocation& alloc);

}  // namespace fairdiv

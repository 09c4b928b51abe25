#pragma once

#include <cstdint>
#include <functional>

#include "fairdiv/checkers.hpp"

namespace fairdiv {

// A solver that is a pure, deterministic function of (instance, permutation).
using PermSolver = std::function<IntegralAllocation(const Instance&, const std::vector<int>&)>;

/**
 * Runs the solver for every one of the n! permutations and aggregates the
 * outcomes into the exact lottery: identical allocations are merged (the
 * lottery ranges over allocations, not permutations), probabilities are exact
 * multiples of 1/n!, and support order is first appearance in lexicographic
 * permutation order.
 */
RandomizedAllocation enumerate_lottery(const PermSolver& solver, const Instance& inst,
                                       std::uint64_t max_outcomes = 720);

struct ExAnteReport {
  PropertyReport ex_ante;                // property of the expected allocation
  bool ex_post_all = true;               // same property on every support element
  std::vector<int> ex_post_failures;     // support indices that fail it
};

// Property must be EF or PROP, the two notions defined for fractional
// allocations. Both the ex-ante and the per-support ex-post verdicts are
// reported.
ExAnteReport verify_exante(const Instance& inst, const RandomizedAllocation& lottery,
                           Property property);

/** Monte-Carlo mixture estimate with a counter-based seed: trial k is
 *  reproducible in isolation. */
struct MixtureReport {
  bool exact = false;
  int trials = 0;
  int support_size = 0;
  FractionalAllocation expected;
  RandomizedAllocation lottery;  // empirical (or exact) mixture
};

MixtureReport sample_lottery(const PermSolver& solver, const Instance& inst, std::uint64_t seed,
                             int trials);

MixtureReport exact_lottery_report(const PermSolver& solver, const Instance& inst,
                                   std::uint64_t max_outcomes = 720);

}  // namespace fairdiv

#pragma once

#include <cstdint>
#include <vector>

#include "fairdiv/allocation.hpp"

namespace fairdiv {

/**
 * Outcome of the partial-allocation reduction: after the rounds of perfect
 * matchings every agent holds exactly `rounds` indivisible goods, the partial
 * allocation is envy-free, and at most 2n-2 goods remain unallocated
 * (the removed neighborhoods Y plus the leftovers V).
 */
struct ReduceResult {
  std::vector<std::vector<int>> partial;  // per-agent good ids, |bundle| == rounds
  std::vector<int> unmatchable_agents;    // T, sorted
  std::vector<int> removed_goods;         // Y, sorted
  std::vector<int> leftover_goods;        // V, sorted
  int rounds = 0;

  std::vector<int> residual() const;  // Y ∪ V, sorted
};

// Round-Robin over `perm` (one pass; requires m <= n) followed by water
// filling of the merged divisible good. Works for arbitrary additive
// utilities. The result is EFM.
IntegralAllocation solve_small_m(const Instance& inst, const std::vector<int>& perm);

// Iterated minimal-unmatchable-group removal + perfect matchings on the
// large-value graph; bi-valued utilities required when scanning is needed.
ReduceResult reduce_instance(const Instance& inst);

// The n < m <= 2n-2 regime: a fixed perfect matching for the matchable
// agents, priority picks for the first m-n agents of the permutation, an
// augmenting-path pass for the unmatchable group, then water filling.
IntegralAllocation solve_mid_m(const Instance& inst, const std::vector<int>& perm);

// Full pipeline: merge divisibles; dispatch small instances to Round-Robin,
// otherwise reduce and hand the residual (at most 2n-2 goods) to the small or
// mid solver. Ex-ante PROP over uniformly random `perm`, ex-post EFM always.
IntegralAllocation solve_prop_efm(const Instance& inst, const std::vector<int>& perm);

// Same, reusing a precomputed reduction (the reduction does not depend on the
// permutation, so lottery enumeration shares it).
IntegralAllocation solve_prop_efm_reduced(const Instance& inst, const ReduceResult& red,
                                          const std::vector<int>& perm);

IntegralAllocation solve_prop_efm_seeded(const Instance& inst, std::uint64_t seed);

}  // namespace fairdiv

#pragma once

#include <vector>

#include "fairdiv/allocation.hpp"

namespace fairdiv {

/**
 * Allocates a single homogeneous divisible good d on top of an EF1 allocation
 * of indivisible goods, producing an EFM allocation of the mixed goods.
 *
 * Event-driven continuous process over exact rationals: d is poured at equal
 * rates into the piles nobody strictly prefers to their own, pausing at every
 * tie event to re-derive the eligible set; strict-preference cycles are
 * resolved by rotating whole piles (a pile is never split, so the indivisible
 * part of the result is a permutation of the input bundles). Each agent's own
 * value never decreases, which is what the proportionality arguments built on
 * top of this procedure rely on.
 *
 * Requires `inst` to carry exactly one divisible good; throws NotEF1 when the
 * input bundles are not EF1.
 */
IntegralAllocation water_fill(const Instance& inst, const std::vector<std::vector<int>>& ef1_bundles);

}  // namespace fairdiv

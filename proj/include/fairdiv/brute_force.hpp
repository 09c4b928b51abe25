#pragma once

#include <cstdint>
#include <vector>

#include "fairdiv/checkers.hpp"

namespace fairdiv {

/**
 * Exhaustive enumeration oracle: walks every assignment of the indivisible
 * goods to agents (divisible goods, when present, are merged and treated as
 * one atomic good) and returns, in lexicographic assignment order, every
 * allocation satisfying the property. Used to certify solver outputs and to
 * cross-check the checkers, never on the solving path.
 */
std::vector<IntegralAllocation> brute_force_property(const Instance& inst, Property property,
                                                     std::uint64_t budget = 10'000'000);

}  // namespace fairdiv

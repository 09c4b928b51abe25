#pragma once

#include <optional>
#include <vector>

#include "fairdiv/allocation.hpp"

// Definition-level evaluators kept deliberately independent of the checkers
// module: utilities are recomputed from the raw matrix with plain loops, and
// the quantifiers are spelled out per pair. These are the oracles the
// checkers are cross-validated against.
namespace oracle {

using fairdiv::Instance;
using fairdiv::IntegralAllocation;
using fairdiv::Rational;

Rational value_of(const Instance& inst, const IntegralAllocation& alloc, int viewer, int owner);

bool ef(const Instance& inst, const IntegralAllocation& alloc);
bool prop(const Instance& inst, const IntegralAllocation& alloc);
bool ef1(const Instance& inst, const IntegralAllocation& alloc);
bool efx(const Instance& inst, const IntegralAllocation& alloc);
bool efm(const Instance& inst, const IntegralAllocation& alloc);
bool efxm(const Instance& inst, const IntegralAllocation& alloc);

// One-sided fPO refuter: searches for an *integral* reallocation that weakly
// improves everyone and strictly improves someone. Finding one disproves fPO;
// finding none proves nothing (fractional dominators may still exist).
bool integral_domination_exists(const Instance& inst, const IntegralAllocation& alloc);

// Exhaustive maximum-matching size for graphs given as adjacency lists.
int brute_force_matching_size(const std::vector<std::vector<int>>& adj, int goods);

}  // namespace oracle

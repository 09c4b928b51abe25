#pragma once

#include <vector>

#include "fairdiv/allocation.hpp"

namespace fairdiv {

/**
 * An ordered two-bundle split of item ids. By convention `low` is the bundle
 * the owning utility values weakly less: u(low) <= u(high).
 */
struct TwoBundleSplit {
  std::vector<int> low;
  std::vector<int> high;
};

/**
 * Local search over a two-bundle partition: while some good of the heavier
 * bundle can move without overshooting, move the most valuable such good
 * (ties to the lowest id), swapping bundle roles whenever the order flips.
 *
 * The result is EFX under u, the bundle difference never exceeds the input
 * difference, and no item moves twice (so at most items.size() moves total).
 */
TwoBundleSplit local_search(std::vector<int> a, std::vector<int> b,
                            const std::vector<Rational>& u, int* moves = nullptr);

struct TwoAgentStats {
  int moves_total = 0;   // across every local-search call of the run
  int max_call_moves = 0;
};

// Ex-ante EF + ex-post EFX lottery for two agents over indivisible goods.
// Returns a singleton when an outright EF split is found, otherwise the
// half-half mixture of the two per-agent EFX splits where the other agent
// picks her preferred bundle first. Total local-search moves <= 2m.
RandomizedAllocation solve_two_agent_efx(const Instance& inst, TwoAgentStats* stats = nullptr);

// Mixed-goods variant: merges divisibles into one good d, runs the EFX
// algorithm on M ∪ {d}, and either returns the EF singleton, equalizes agent
// i's bundles by transferring an exact fraction of d when d sits in her
// heavier bundle, or returns the half-half lottery (then d lies in the
// lighter bundle on both sides, so every support element is EFXM).
RandomizedAllocation solve_two_agent_efm(const Instance& inst, TwoAgentStats* stats = nullptr);

}  // namespace fairdiv

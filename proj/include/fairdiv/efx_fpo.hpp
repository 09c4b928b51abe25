#pragma once

#include <cstdint>
#include <vector>

#include "fairdiv/allocation.hpp"

namespace fairdiv {

enum class AgentStatus { Active, Frozen, Quiet };

/**
 * Per-round record of a run: enough to drive the Fisher-market pricing, the
 * --trace output, and the per-round induction checks in the tests.
 */
struct RunTrace {
  struct Round {
    int round = 0;
    std::vector<int> group;               // Z_t (empty for perfect-matching rounds)
    std::vector<int> neighborhood;        // Γ(Z_t)
    std::vector<std::pair<int, int>> matched;  // (agent, good) receipts this round
    std::vector<int> frozen;              // agents frozen this round
    std::vector<int> quiet;               // agents that turned quiet this round
    int swap_iterations = 0;              // inner good-swap loop count
    std::vector<std::vector<int>> bundles_after;  // snapshot for the induction tests
  };
  std::vector<Round> rounds;
  std::vector<int> grouped_round;   // per agent: round it joined some Z_t, -1 if never
  std::vector<char> ever_frozen;    // per agent
  std::vector<std::pair<int, int>> final_stage;   // (agent, good) or (agent, -1) for a reserve
  std::vector<std::pair<int, int>> market_clear;  // line-28 style assignments
  std::vector<int> reserved;        // final c_i per agent
};

/**
 * Bi-valued indivisible goods with a > 0: samples from the ex-ante EF,
 * ex-post EFX, ex-post fPO randomized allocation. The run is a deterministic
 * function of (instance, perm); the lottery is the uniform mixture over all
 * permutations.
 */
IntegralAllocation solve_efx_fpo(const Instance& inst, const std::vector<int>& perm,
                                 RunTrace* trace = nullptr);

IntegralAllocation solve_efx_fpo_seeded(const Instance& inst, std::uint64_t seed,
                                        RunTrace* trace = nullptr);

}  // namespace fairdiv

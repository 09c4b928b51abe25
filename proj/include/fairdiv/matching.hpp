#pragma once

#include <string>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

/**
 * The agent-good "large value" bipartite graph: an edge (i, g) exists when
 * u_i(g) equals the large value b. Vertices carry original ids; the matching
 * maps agents to goods injectively in both directions.
 *
 * All searches are deterministic: agents are processed in ascending id order
 * and depth-first augmentation visits neighbors in ascending good id, so every
 * downstream solver is a pure function of (instance, permutation).
 */
struct BipartiteState {
  std::vector<int> agents;  // sorted original agent ids
  std::vector<int> goods;   // sorted original good ids
  std::vector<std::vector<int>> adj;  // local agent index -> sorted local good indices
  std::vector<int> agent_match;       // local, -1 if unmatched
  std::vector<int> good_match;        // local, -1 if unmatched

  int matching_size() const;
  int local_agent(int original_id) const;
  int local_good(int original_id) const;
  bool has_edge(int agent_id, int good_id) const;

  std::string to_dot() const;  // debug dump
};

// Builds the graph over the given agents and indivisible goods; the edge rule
// is u_i(g) == large. Vertex lists are sorted copies of the inputs.
BipartiteState build_large_value_graph(const Instance& inst, const std::vector<int>& agent_ids,
                                       const std::vector<int>& good_ids, const Rational& large);

// Kuhn's algorithm; resulting matching is maximum (no augmenting path remains).
BipartiteState max_matching(BipartiteState state);

struct UnmatchableGroup {
  std::vector<int> group;      // Z, sorted original agent ids
  std::vector<int> neighbors;  // Γ(Z), sorted original good ids
};

// Alternating-path reachability from every unmatched agent (breadth-first over
// non-matching then matching edges). Requires a maximum matching. Z is empty
// iff a perfect matching of all agents exists; otherwise |Γ(Z)| < |Z|.
UnmatchableGroup minimal_unmatchable_group(const BipartiteState& state);

// Applies an augmenting path from the unmatched agent into an unmatched good
// of `targets` (original ids). Returns false (state untouched) when none exists.
bool augment_to_good(BipartiteState& state, int agent_id, const std::vector<int>& targets);

// Injective matching covering every agent of `agent_ids` using only goods in
// `good_ids`; throws NoPerfectMatching when impossible. Returns original-id pairs.
std::vector<std::pair<int, int>> perfect_matching_between(const BipartiteState& state,
                                                          const std::vector<int>& agent_ids,
                                                          const std::vector<int>& good_ids);

}  // namespace fairdiv

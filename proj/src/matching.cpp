#include "fairdiv/matching.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

int index_of(const std::vector<int>& sorted, int id) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), id);
  if (it == sorted.end() || *it != id) return -1;
  return static_cast<int>(it - sorted.begin());
}

// Depth-first augmenting search, ascending neighbor order.
bool try_augment(const BipartiteState& state, int agent, const std::vector<char>& good_allowed,
                 std::vector<char>& visited, std::vector<int>& agent_match,
                 std::vector<int>& good_match) {
  for (int g : state.adj[agent]) {
    if (!good_allowed[g] || visited[g]) continue;
    visited[g] = 1;
    if (good_match[g] == -1 ||
        try_augment(state, good_match[g], good_allowed, visited, agent_match, good_match)) {
      agent_match[agent] = g;
      good_match[g] = agent;
      return true;
    }
  }
  return false;
}

}  // namespace

int BipartiteState::matching_size() const {
  int size = 0;
  for (int g : agent_match) size += g != -1;
  return size;
}

int BipartiteState::local_agent(int original_id) const { return index_of(agents, original_id); }
int BipartiteState::local_good(int original_id) const { return index_of(goods, original_id); }

bool BipartiteState::has_edge(int agent_id, int good_id) const {
  int a = local_agent(agent_id), g = local_good(good_id);
  if (a < 0 || g < 0) return false;
  return std::binary_search(adj[a].begin(), adj[a].end(), g);
}

std::string BipartiteState::to_dot() const {
  std::ostringstream out;
  out << "graph large_value {\n";
  for (size_t a = 0; a < agents.size(); ++a)
    for (int g : adj[a]) {
      out << "  a" << agents[a] << " -- g" << goods[g];
      if (agent_match[a] == g) out << " [style=bold]";
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

BipartiteState build_large_value_graph(const Instance& inst, const std::vector<int>& agent_ids,
                                       const std::vector<int>& good_ids, const Rational& large) {
  BipartiteState state;
  state.agents = agent_ids;
  state.goods = good_ids;
  std::sort(state.agents.begin(), state.agents.end());
  std::sort(state.goods.begin(), state.goods.end());
  state.adj.resize(state.agents.size());
  for (size_t a = 0; a < state.agents.size(); ++a)
    for (size_t g = 0; g < state.goods.size(); ++g)
      if (inst.util(state.agents[a], state.goods[g]) == large)
        state.adj[a].push_back(static_cast<int>(g));
  state.agent_match.assign(state.agents.size(), -1);
  state.good_match.assign(state.goods.size(), -1);
  return state;
}

BipartiteState max_matching(BipartiteState state) {
  std::vector<char> allowed(state.goods.size(), 1);
  for (size_t a = 0; a < state.agents.size(); ++a) {
    if (state.agent_match[a] != -1) continue;
    std::vector<char> visited(state.goods.size(), 0);
    try_augment(state, static_cast<int>(a), allowed, visited, state.agent_match, state.good_match);
  }
  return state;
}

UnmatchableGroup minimal_unmatchable_group(const BipartiteState& state) {
  // Sanity: a maximum matching admits no augmenting path from any unmatched agent.
  {
    std::vector<char> allowed(state.goods.size(), 1);
    for (size_t a = 0; a < state.agents.size(); ++a) {
      if (state.agent_match[a] != -1) continue;
      std::vector<char> visited(state.goods.size(), 0);
      auto agent_match = state.agent_match;
      auto good_match = state.good_match;
      if (try_augment(state, static_cast<int>(a), allowed, visited, agent_match, good_match))
        throw precondition("MatchingNotMaximum");
    }
  }

  std::vector<char> agent_reached(state.agents.size(), 0);
  std::vector<char> good_reached(state.goods.size(), 0);
  std::deque<int> frontier;
  for (size_t a = 0; a < state.agents.size(); ++a)
    if (state.agent_match[a] == -1) {
      agent_reached[a] = 1;
      frontier.push_back(static_cast<int>(a));
    }
  while (!frontier.empty()) {
    int a = frontier.front();
    frontier.pop_front();
    for (int g : state.adj[a]) {
      if (good_reached[g]) continue;
      good_reached[g] = 1;
      int owner = state.good_match[g];
      // Maximum matching: every reached good is matched, else there was an
      // augmenting path.
      require_internal(owner != -1, "alternating reachability hit an unmatched good");
      if (!agent_reached[owner]) {
        agent_reached[owner] = 1;
        frontier.push_back(owner);
      }
    }
  }

  UnmatchableGroup result;
  for (size_t a = 0; a < state.agents.size(); ++a)
    if (agent_reached[a]) result.group.push_back(state.agents[a]);
  for (size_t g = 0; g < state.goods.size(); ++g)
    if (good_reached[g]) result.neighbors.push_back(state.goods[g]);
  return result;
}

bool augment_to_good(BipartiteState& state, int agent_id, const std::vector<int>& targets) {
  int a = state.local_agent(agent_id);
  if (a < 0) throw precondition("agent not in graph");
  if (state.agent_match[a] != -1) throw precondition("AgentAlreadyMatched");
  // Paths may pass through any good but must terminate inside `targets`.
  std::vector<char> target_set(state.goods.size(), 0);
  for (int id : targets) {
    int g = state.local_good(id);
    if (g >= 0) target_set[g] = 1;
  }
  std::vector<char> visited(state.goods.size(), 0);
  auto agent_match = state.agent_match;
  auto good_match = state.good_match;

  // Same DFS as try_augment but a free good only ends the path if targeted.
  auto dfs = [&](auto&& self, int node) -> bool {
    for (int g : state.adj[node]) {
      if (visited[g]) continue;
      visited[g] = 1;
      if (good_match[g] == -1) {
        if (!target_set[g]) continue;
        agent_match[node] = g;
        good_match[g] = node;
        return true;
      }
      if (self(self, good_match[g])) {
        agent_match[node] = g;
        good_match[g] = node;
        return true;
      }
    }
    return false;
  };
  if (!dfs(dfs, a)) return false;
  state.agent_match = std::move(agent_match);
  state.good_match = std::move(good_match);
  return true;
}

std::vector<std::pair<int, int>> perfect_matching_between(const BipartiteState& state,
                                                          const std::vector<int>& agent_ids,
                                                          const std::vector<int>& good_ids) {
  std::vector<char> allowed(state.goods.size(), 0);
  for (int id : good_ids) {
    int g = state.local_good(id);
    if (g >= 0) allowed[g] = 1;
  }
  std::vector<int> locals;
  for (int id : agent_ids) {
    int a = state.local_agent(id);
    if (a < 0) throw precondition("agent not in graph");
    locals.push_back(a);
  }
  std::sort(locals.begin(), locals.end());

  std::vector<int> agent_match(state.agents.size(), -1), good_match(state.goods.size(), -1);
  for (int a : locals) {
    std::vector<char> visited(state.goods.size(), 0);
    if (!try_augment(state, a, allowed, visited, agent_match, good_match))
      throw precondition("NoPerfectMatching");
  }
  std::vector<std::pair<int, int>> result;
  for (int a : locals) result.emplace_back(state.agents[a], state.goods[agent_match[a]]);
  return result;
}

}  // namespace fairdiv

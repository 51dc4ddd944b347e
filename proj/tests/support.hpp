#ifndef RABKIT_TESTS_SUPPORT_HPP
#define RABKIT_TESTS_SUPPORT_HPP

#include <vector>

#include "rabkit/graph.hpp"

namespace testing_support {

inline std::vector<std::vector<bool>> adjacency(const rab::SimplicialGraph& g) {
  std::vector<std::vector<bool>> adj(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

inline rab::SimplicialGraph edge_pair() { return rab::SimplicialGraph::from_edges(2, {{0, 1}}); }
inline rab::SimplicialGraph edgeless(int n) { return rab::SimplicialGraph(n); }

}  // namespace testing_support

#endif  // RABKIT_TESTS_SUPPORT_HPP

#ifndef RABKIT_GRAPH_HPP
#define RABKIT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rab {

using Vertex = int;
/// Vertex subsets are bitmasks; graphs are limited to kMaxVertices vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet set, Vertex v) { return (set >> v) & 1U; }
int popcount(VertexSet set);
/// Members of `set` in increasing order.
std::vector<Vertex> members(VertexSet set);
/// Names are nonempty and drawn from [A-Za-z0-9_.-] so that word text stays unambiguous.
bool valid_vertex_name(std::string_view name);

/// A finite simplicial graph: the defining graph of a right-angled Artin or
/// Coxeter group. Vertices are indices 0..n-1 carrying unique names.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  /// Edgeless graph on n vertices named "0", "1", ...
  explicit SimplicialGraph(int n);
  /// Edgeless graph with the given (unique) vertex names.
  explicit SimplicialGraph(std::vector<std::string> names);

  static SimplicialGraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
  static SimplicialGraph cycle(int n);
  static SimplicialGraph path(int n);
  static SimplicialGraph complete(int n);
  /// 1-skeleton of the 3-cube; vertex i is adjacent to i^1, i^2, i^4.
  static SimplicialGraph cube();
  static SimplicialGraph star(int leaves);

  /// Adds the edge {u, v}; throws ParseError on loops or duplicates.
  void add_edge(Vertex u, Vertex v);

  int order() const { return static_cast<int>(adjacency_.size()); }
  bool adjacent(Vertex u, Vertex v) const { return contains(adjacency_[u], v); }
  /// s^perp: the neighbours of s.
  VertexSet link(Vertex s) const { return adjacency_[s]; }
  /// s ∪ s^perp.
  VertexSet star_of(Vertex s) const { return adjacency_[s] | bit(s); }
  VertexSet all() const;
  int degree(Vertex v) const { return popcount(adjacency_[v]); }
  int edge_count() const;
  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const std::string& name(Vertex v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view name) const;

  /// Induced subgraph on `subset`, vertices renumbered in increasing order.
  SimplicialGraph induced(VertexSet subset) const;
  /// True iff the induced subgraph on `subset` is connected (empty counts as connected).
  bool connected_within(VertexSet subset) const;

  /// Relabels vertex v to perm[v]; perm must be a bijection of 0..n-1.
  bool is_automorphism(const std::vector<Vertex>& perm) const;

  friend bool operator==(const SimplicialGraph&, const SimplicialGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adjacency_;
};

}  // namespace rab

#endif  // RABKIT_GRAPH_HPP

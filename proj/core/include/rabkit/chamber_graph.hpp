#ifndef RABKIT_CHAMBER_GRAPH_HPP
#define RABKIT_CHAMBER_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rabkit/building.hpp"
#include "rabkit/rigidity.hpp"

namespace rab {

/// An uncoloured simple graph on opaque labelled vertices.
class PlainGraph {
 public:
  PlainGraph() = default;
  explicit PlainGraph(std::vector<std::string> labels);

  int order() const { return static_cast<int>(adj_.size()); }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const;
  /// Adds {u, v}; returns false if already present.
  bool add_edge(int u, int v);
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const PlainGraph&, const PlainGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
};

/// Forgets types and gates of a ball.
PlainGraph chamber_graph(const Ball& ball);

/// All maximal cliques, each sorted, in lexicographic order.
std::vector<std::vector<int>> maximal_cliques(const PlainGraph& g);

/// For a bent path x - y - z (x, z non-adjacent): true iff it lies on an
/// induced 4-cycle, i.e. the two panel types commute.
bool detect_commuting_types(const PlainGraph& g, int x, int y, int z);

struct TypedDecoration {
  std::vector<std::vector<int>> cliques;
  std::vector<std::optional<Vertex>> clique_type;
  /// Vertices whose incident cliques all received types.
  std::vector<bool> decorated;
  /// Vertices where several type assignments were compatible.
  std::vector<int> ambiguous;

  std::optional<Vertex> edge_type(int u, int v) const;
  int decorated_count() const;
};

/// Vertices of the ball whose own panels and whose neighbours' panels lie
/// entirely inside the ball (within the colour window).
std::vector<bool> trusted_vertices(const Building& b, const Ball& ball);

/// True types of the cliques at `v`, in the order of cliques_at(v).
std::vector<Vertex> ground_truth_seed(const Building& b, const Ball& ball, const PlainGraph& g, int v);
/// Maximal cliques containing v, sorted.
std::vector<std::vector<int>> cliques_at(const PlainGraph& g, int v);

/// Propagates the seed typing at `seed_vertex` over trusted vertices.
/// Throws InconsistentPropagation when two propagation paths disagree.
TypedDecoration reconstruct_types(const PlainGraph& g, const SimplicialGraph& gamma, int seed_vertex,
                                  const std::vector<Vertex>& seed_types, const std::vector<bool>& trusted);

/// Diagram permutation pi with decorated type = pi(true type) on every
/// decorated edge, if one exists and is an automorphism of the type graph.
std::optional<Permutation> match_ground_truth(const TypedDecoration& d, const Building& b, const Ball& ball);

}  // namespace rab

#endif  // RABKIT_CHAMBER_GRAPH_HPP

#ifndef RABKIT_RIGIDITY_HPP
#define RABKIT_RIGIDITY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rabkit/graph.hpp"

namespace rab {

/// Vertex permutation; perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

inline constexpr int kDefaultExactBound = 12;

struct GraphAnalysis {
  bool r1 = false;
  bool r2 = false;
  bool r3 = false;
  bool irreducible = false;
  bool connected = false;
  bool has_dominating_vertex = false;
  std::vector<std::pair<Vertex, Vertex>> domination_pairs;
  std::uint64_t automorphism_count = 0;
};

/// Nontrivial automorphism fixing star(s) pointwise.
struct R3Witness {
  Vertex vertex;
  Permutation automorphism;
};

struct SurveyResult {
  int n = 0;
  double p = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int r1 = 0;
  int r2 = 0;
  int r3 = 0;
  int irreducible = 0;
  int conjunction = 0;

  double fraction(int count) const { return trials == 0 ? 0.0 : static_cast<double>(count) / trials; }
};

SimplicialGraph complement(const SimplicialGraph& g);
bool is_connected(const SimplicialGraph& g);
bool check_r1(const SimplicialGraph& g);
/// All ordered pairs (s, t), s != t, with s^perp contained in star(t).
std::vector<std::pair<Vertex, Vertex>> check_r2(const SimplicialGraph& g);
bool is_irreducible(const SimplicialGraph& g);
bool has_dominating_vertex(const SimplicialGraph& g);

/// Every automorphism, in lexicographic order. Throws BoundExceeded above `max_vertices`.
std::vector<Permutation> automorphism_group(const SimplicialGraph& g, int max_vertices = kDefaultExactBound);
/// R3 decided from automorphism_group; same bound.
bool check_r3(const SimplicialGraph& g, int max_vertices = kDefaultExactBound);

/// R3 by individualization-refinement search; exact for any order.
std::optional<R3Witness> find_r3_witness(const SimplicialGraph& g);
/// Nontrivial automorphism fixing `fixed` pointwise, if one exists.
std::optional<Permutation> nontrivial_automorphism_fixing(const SimplicialGraph& g, VertexSet fixed);
/// |Aut(g)| through a stabilizer chain. Throws BoundExceeded on 64-bit overflow.
std::uint64_t automorphism_count(const SimplicialGraph& g);

GraphAnalysis analyze(const SimplicialGraph& g);

/// G(n, p) with edges {i<j} visited in lexicographic order.
SimplicialGraph random_graph(int n, double p, std::uint64_t seed);
SurveyResult survey(int n, double p, int trials, std::uint64_t seed);

}  // namespace rab

#endif  // RABKIT_RIGIDITY_HPP

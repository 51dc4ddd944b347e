#ifndef RABKIT_BUILDING_HPP
#define RABKIT_BUILDING_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rabkit/graph_product.hpp"

namespace rab {

/// The coset gate * <X_J>, stored by its minimal-length representative.
struct Residue {
  VertexSet type = 0;
  GroupElement gate;

  friend bool operator==(const Residue& a, const Residue& b) { return a.type == b.type && a.gate == b.gate; }
};

struct BallEdge {
  int a = 0;
  int b = 0;
  Vertex type = 0;
  /// Gate of the shared panel.
  GroupElement gate;
};

/// A finite piece of the chamber system around a centre.
struct Ball {
  GroupElement center;
  int radius = 0;
  std::optional<std::int64_t> window;
  /// Sorted by (depth, shortlex).
  std::vector<GroupElement> chambers;
  std::vector<int> depth;
  /// Pairs of chambers in a common panel, a < b, sorted.
  std::vector<BallEdge> edges;
  std::unordered_map<GroupElement, int> index;

  int size() const { return static_cast<int>(chambers.size()); }
  std::optional<int> find(const GroupElement& c) const;
};

/// The semi-regular right-angled building whose chambers are the elements of
/// a graph product, with s-panels the left cosets of X_s.
class Building {
 public:
  explicit Building(PresentationPtr pres);

  const PresentationPtr& presentation() const { return pres_; }
  const SimplicialGraph& graph() const { return pres_->graph(); }
  int rank() const { return pres_->rank(); }
  GroupElement base() const { return GroupElement::identity(pres_); }
  GroupElement chamber(const std::string& text) const { return parse_word(pres_, text); }

  Residue panel(const GroupElement& c, Vertex s) const { return residue(c, bit(s)); }
  Residue residue(const GroupElement& c, VertexSet type) const;
  Residue tree_wall(const GroupElement& c, Vertex s) const { return residue(c, graph().star_of(s)); }
  bool contains(const Residue& r, const GroupElement& c) const;

  /// Gate of c on r: the unique chamber of r nearest to c.
  GroupElement project(const Residue& r, const GroupElement& c) const;
  /// Tree-wall criterion for parallel panels.
  bool parallel(const Residue& p, const Residue& q) const;
  /// Parallelism from the definition, checked on chambers of q within `span` of its gate.
  bool parallel_by_projection(const Residue& p, const Residue& q, std::int64_t span = 3) const;

  /// Chambers of an s-panel. Infinite panels need `span`: colours within span of the gate's.
  std::vector<GroupElement> panel_chambers(const Residue& p, std::optional<std::int64_t> span = std::nullopt) const;

  /// lambda_s(c) = rho_s(c) for every s.
  std::vector<VertexElement> colour(const GroupElement& c) const;
  /// Type of a minimal gallery from c to d, as an element of W(Gamma).
  GroupElement weyl_distance(const GroupElement& c, const GroupElement& d) const;
  /// Gallery distance.
  int distance(const GroupElement& c, const GroupElement& d) const;
  std::vector<GroupElement> minimal_gallery(const GroupElement& c, const GroupElement& d) const;
  /// True iff c and d are distinct chambers of a common panel; sets `type`.
  bool adjacent(const GroupElement& c, const GroupElement& d, Vertex* type = nullptr) const;

  /// Chambers reachable from `center` by galleries of length <= radius that
  /// stay inside the colour window. Infinite vertex groups require a window.
  Ball ball(const GroupElement& center, int radius, std::optional<std::int64_t> window = std::nullopt) const;

 private:
  PresentationPtr pres_;
};

}  // namespace rab

#endif  // RABKIT_BUILDING_HPP

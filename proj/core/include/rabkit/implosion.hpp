#ifndef RABKIT_IMPLOSION_HPP
#define RABKIT_IMPLOSION_HPP

#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rabkit/automorphism.hpp"
#include "rabkit/building.hpp"
#include "rabkit/local_action.hpp"

namespace rab {

/// The map tau from a building onto the building over the types with more
/// than one colour class, defined along galleries from the base chamber:
/// stepping inside an s-panel moves by the change of the s-colour class.
class ImplosionMap {
 public:
  ImplosionMap(Building source, std::vector<ColourClasses> classes);

  const Building& source() const { return source_; }
  const Building& target() const { return target_; }
  const std::vector<ColourClasses>& classes() const { return classes_; }
  /// Target vertex of each source type, or -1 for collapsed types.
  const std::vector<Vertex>& target_vertex() const { return target_vertex_; }

  /// Memoized; checks agreement over every way of peeling a final syllable
  /// and throws InconsistentImplosion on disagreement.
  GroupElement operator()(const GroupElement& c) const;

  /// (chamber, image) for every chamber of the region, in region order.
  std::vector<std::pair<GroupElement, GroupElement>> table(const Ball& region) const;

 private:
  Building source_;
  std::vector<ColourClasses> classes_;
  std::vector<Vertex> target_vertex_;
  Building target_;

  struct Memo {
    std::mutex mutex;
    std::unordered_map<GroupElement, GroupElement> values;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

/// Builds tau and evaluates it on the whole region.
ImplosionMap implode(const Building& b, std::vector<ColourClasses> classes, const Ball& region);

/// Colour classes of the mod-2 implosion onto W(Gamma). Throws NoParityMap
/// for odd finite vertex groups.
std::vector<ColourClasses> parity_classes(const Building& b);

/// The induced action psi(g): tau(c) -> tau(g c), tabulated on tau(region).
class PsiMap {
 public:
  /// Throws RegionTooSmall for imploded chambers outside the table.
  GroupElement operator()(const GroupElement& x) const;
  const std::unordered_map<GroupElement, GroupElement>& table() const { return table_; }
  bool is_identity() const;

 private:
  friend PsiMap psi(const BuildingAutomorphism&, const ImplosionMap&, const Ball&);
  std::unordered_map<GroupElement, GroupElement> table_;
};

/// Throws NotWellDefined if tau(c) = tau(d) but tau(g c) != tau(g d) on the region.
PsiMap psi(const BuildingAutomorphism& g, const ImplosionMap& tau, const Ball& region);

/// An element (v, pi) of W(Gamma) semidirect Aut(Gamma).
struct CoxeterImage {
  GroupElement v;
  Permutation pi;

  friend bool operator==(const CoxeterImage&, const CoxeterImage&) = default;
};

/// (v1, pi1)(v2, pi2) = (v1 pi1(v2), pi1 pi2).
CoxeterImage compose(const CoxeterImage& a, const CoxeterImage& b);

/// alpha(g) = (tau(g c0), pi(g)) with tau the mod-2 implosion.
CoxeterImage coxeter_projection(const BuildingAutomorphism& g);

}  // namespace rab

#endif  // RABKIT_IMPLOSION_HPP

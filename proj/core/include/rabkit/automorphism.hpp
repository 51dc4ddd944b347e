#ifndef RABKIT_AUTOMORPHISM_HPP
#define RABKIT_AUTOMORPHISM_HPP

#include <string>
#include <variant>
#include <vector>

#include "rabkit/building.hpp"
#include "rabkit/local_action.hpp"
#include "rabkit/rigidity.hpp"

namespace rab {

/// c -> h c.
struct Translation {
  GroupElement h;
};

/// Rewrites the head of every chamber at an s-panel: with p = proj_P(c) and
/// a = lambda_s(p), c -> p' p^-1 c where p' is the chamber of P coloured f(a).
struct TreeWallPerm {
  Residue panel;
  Vertex type = 0;
  LocalPerm f;
};

/// Relabels syllable types by a type-graph automorphism.
struct DiagramAuto {
  Permutation pi;
};

using ElementaryAutomorphism = std::variant<Translation, TreeWallPerm, DiagramAuto>;

/// A word in elementary automorphisms of a building, evaluated lazily per
/// chamber. The rightmost generator acts first.
class BuildingAutomorphism {
 public:
  explicit BuildingAutomorphism(Building b) : building_(std::move(b)) {}

  static BuildingAutomorphism translation(const Building& b, const GroupElement& h);
  /// Throws NotABijection unless f is a bijection of the colours of P's type.
  static BuildingAutomorphism tree_wall_perm(const Building& b, const Residue& panel, const LocalPerm& f);
  /// Throws Error unless pi is a type-graph automorphism preserving vertex groups.
  static BuildingAutomorphism diagram(const Building& b, const Permutation& pi);

  const Building& building() const { return building_; }
  const std::vector<ElementaryAutomorphism>& word() const { return word_; }
  bool is_identity_word() const { return word_.empty(); }

  GroupElement apply(const GroupElement& c) const;
  /// The accumulated diagram permutation pi(g).
  Permutation diagram_permutation() const;
  BuildingAutomorphism inverse() const;

  /// (a * b)(c) = a(b(c)).
  friend BuildingAutomorphism operator*(const BuildingAutomorphism& a, const BuildingAutomorphism& b);

 private:
  Building building_;
  std::vector<ElementaryAutomorphism> word_;
};

std::string to_string(const BuildingAutomorphism& g);

/// Chamber of the s-panel P with colour a.
GroupElement panel_chamber(const Building& b, const Residue& p, const VertexElement& colour);

/// sigma(g, P) = lambda|gP o g o (lambda|P)^-1. Infinite panels must act affinely
/// on the sampled colours, otherwise NonComputablePanel.
LocalPerm local_action(const BuildingAutomorphism& g, const Residue& p);

struct MembershipViolation {
  Residue panel;
  LocalPerm action;
};

struct MembershipReport {
  int panels_checked = 0;
  std::vector<MembershipViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the local action of g at every panel meeting the region against F.
MembershipReport verify_membership(const BuildingAutomorphism& g, const std::vector<LocalActionGroup>& f,
                                   const Ball& region);

/// Components of the graph joining c to g(c) for every generator g, restricted
/// to the region. Labels are dense, in order of first chamber.
std::vector<int> orbit_census(const std::vector<BuildingAutomorphism>& generators, const Ball& region);

}  // namespace rab

#endif  // RABKIT_AUTOMORPHISM_HPP

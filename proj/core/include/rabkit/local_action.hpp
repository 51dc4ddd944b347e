#ifndef RABKIT_LOCAL_ACTION_HPP
#define RABKIT_LOCAL_ACTION_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rabkit/graph_product.hpp"

namespace rab {

/// A bijection of a vertex group X_s viewed as a set of colours:
/// (r, z) -> (perm[r], eps * z + shift). Finite groups use perm only, Z uses
/// the affine part only, Z/n x Z uses both.
struct LocalPerm {
  std::vector<int> perm{0};
  int eps = 1;
  std::int64_t shift = 0;

  static LocalPerm identity(const VertexGroupSpec& spec);
  static LocalPerm finite(std::vector<int> perm);
  static LocalPerm affine(int eps, std::int64_t shift);
  /// x -> x + k on Z/q, Z or the Z-coordinate of Z/n x Z.
  static LocalPerm translation(const VertexGroupSpec& spec, std::int64_t k);

  VertexElement apply(const VertexElement& e) const;
  bool is_identity() const;
  /// Throws NotABijection unless this is a bijection of the colours of `spec`.
  void validate(const VertexGroupSpec& spec) const;

  friend bool operator==(const LocalPerm&, const LocalPerm&) = default;
  friend auto operator<=>(const LocalPerm&, const LocalPerm&) = default;
};

/// (a * b)(x) = a(b(x)).
LocalPerm compose(const LocalPerm& a, const LocalPerm& b);
LocalPerm inverse(const LocalPerm& a);
std::string to_string(const LocalPerm& p);

/// A partition of the colours of X_s with the identity in class 0.
class ColourClasses {
 public:
  enum class Kind { Identity, Table, Modular, Folded };

  /// Every colour its own class.
  static ColourClasses identity() { return ColourClasses(Kind::Identity); }
  /// Finite colours: table[r] is the class of residue r.
  static ColourClasses table(std::vector<int> classes);
  /// Classes z mod m (z is the Z-coordinate, or the residue for finite groups).
  static ColourClasses modular(std::int64_t m);
  /// Classes of x under x ~ x + m and x ~ c - x.
  static ColourClasses folded(std::int64_t m, std::int64_t c);

  Kind kind() const { return kind_; }
  /// Number of classes for the given vertex group; 0 means infinitely many.
  std::int64_t count(const VertexGroupSpec& spec) const;
  std::int64_t classify(const VertexGroupSpec& spec, const VertexElement& e) const;
  /// Vertex group of class labels; identity classes keep the source group.
  VertexGroupSpec target_spec(const VertexGroupSpec& spec) const;
  /// Class of e as an element of target_spec.
  VertexElement label(const VertexGroupSpec& spec, const VertexElement& e) const;

  std::string describe() const;

 private:
  explicit ColourClasses(Kind k) : kind_(k) {}
  Kind kind_;
  std::vector<int> table_;
  std::int64_t m_ = 0;
  std::int64_t c_ = 0;
  std::vector<int> folded_ids_;
};

/// A permutation group F_s on the colours of X_s: generated by finite
/// permutations, or a group of isometries of the integer line in normal form
/// {x -> x + d k} union (optionally) {x -> -x + c0 + d k}.
class LocalActionGroup {
 public:
  enum class Kind { Finite, Line };

  static LocalActionGroup finite(int degree, std::vector<std::vector<int>> generators);
  static LocalActionGroup symmetric(int degree);
  static LocalActionGroup cyclic_regular(int degree);
  /// Closure of affine generators on Z.
  static LocalActionGroup line(const std::vector<LocalPerm>& generators);
  static LocalActionGroup line_normal_form(std::int64_t lattice, bool reflections, std::int64_t c0);
  static LocalActionGroup line_isometries() { return line_normal_form(1, true, 0); }
  static LocalActionGroup line_translations() { return line_normal_form(1, false, 0); }
  /// The regular action of X_s on itself.
  static LocalActionGroup regular(const VertexGroupSpec& spec);

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  const std::vector<std::vector<int>>& generators() const { return generators_; }
  std::int64_t lattice() const { return lattice_; }
  bool has_reflections() const { return reflections_; }
  std::int64_t reflection_offset() const { return c0_; }

  bool contains(const LocalPerm& p) const;
  /// All elements of a finite group, sorted. Throws BoundExceeded past the closure limit.
  const std::vector<std::vector<int>>& elements() const;
  std::uint64_t order() const;
  std::string describe() const;

 private:
  LocalActionGroup() = default;

  Kind kind_ = Kind::Finite;
  int degree_ = 0;
  std::vector<std::vector<int>> generators_;
  std::int64_t lattice_ = 0;
  bool reflections_ = false;
  std::int64_t c0_ = 0;

  struct Cache {
    std::once_flag once;
    std::vector<std::vector<int>> elements;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// F+ (generated by point stabilizers), its orbits, and the quotient F/F+.
struct PlusClosure {
  LocalActionGroup plus;
  ColourClasses orbits;
  std::int64_t orbit_count = 0;
  std::uint64_t quotient_order = 0;
  bool quotient_acts_freely = false;
};

/// Throws UnsupportedSymbolicGroup when the orbit set of F+ is infinite.
PlusClosure point_stabilizer_closure(const LocalActionGroup& f);

}  // namespace rab

#endif  // RABKIT_LOCAL_ACTION_HPP

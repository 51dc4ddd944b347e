#ifndef RABKIT_TWO_GON_HPP
#define RABKIT_TWO_GON_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace rab {

/// The generalized 2-gon with chamber set Sym(n): s-panels are the left
/// cosets of the n-cycle subgroup, t-panels the left cosets of the stabilizer
/// of the point 0. Colours: lambda_s(h) = h(0), lambda_t(h) = index of the
/// s-panel containing h.
struct TwoGon {
  int n = 0;
  /// Chambers as permutations of {0..n-1}, in lexicographic order.
  std::vector<std::vector<int>> chambers;
  std::vector<int> s_panel;
  std::vector<int> t_panel;
  std::vector<int> s_colour;
  std::vector<int> t_colour;
  int s_colours = 0;
  int t_colours = 0;
  /// Local actions of the panel stabilizers in Sym(n) at the base panels.
  std::vector<std::vector<int>> f_s;
  std::vector<std::vector<int>> f_t;

  int size() const { return static_cast<int>(chambers.size()); }
};

/// Supports 2 <= n <= 4.
TwoGon make_two_gon(int n);

/// Permutation of the colours of panel `panel` (type 0 = s, 1 = t) induced by
/// a chamber permutation, if it maps that panel onto a panel of the same type.
std::optional<std::vector<int>> two_gon_local_action(const TwoGon& x, const std::vector<int>& chamber_perm, int type,
                                                     int panel);

/// True iff the chamber permutation preserves both panel partitions and all
/// of its local actions lie in f_s and f_t.
bool respects_colour_rule(const TwoGon& x, const std::vector<int>& chamber_perm);

/// All colour-rule-respecting chamber permutations, sorted (backtracking search).
std::vector<std::vector<int>> two_gon_universal_group(const TwoGon& x);

/// Left multiplication by each element of Sym(n), as chamber permutations.
std::vector<std::vector<int>> two_gon_regular_group(const TwoGon& x);

struct TwoGonViolation {
  int element = 0;
  int type = 0;
  int panel = 0;
  std::vector<int> action;
};

struct TwoGonReport {
  int n = 0;
  int chambers = 0;
  std::uint64_t universal_order = 0;
  std::uint64_t f_s_order = 0;
  std::uint64_t f_t_order = 0;
  /// The map g -> (local action at the base s-panel, at the base t-panel) is
  /// an isomorphism onto f_s x f_t.
  bool direct_product = false;
  bool f_s_cyclic = false;
  std::uint64_t regular_order = 0;
  bool regular_is_simply_transitive = false;
  std::optional<TwoGonViolation> violation;
};

TwoGonReport analyze_two_gon(int n);

}  // namespace rab

#endif  // RABKIT_TWO_GON_HPP

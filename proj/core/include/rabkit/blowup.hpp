#ifndef RABKIT_BLOWUP_HPP
#define RABKIT_BLOWUP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rabkit/automorphism.hpp"
#include "rabkit/building.hpp"
#include "rabkit/chamber_graph.hpp"

namespace rab {

/// Z-valued blow-up maps h_P, one rule per type, given as a function of the
/// panel gate and the chamber's colour of that type.
struct ZBlowUpData {
  using Rule = std::function<std::int64_t(const GroupElement& gate, const VertexElement& colour)>;
  std::vector<Rule> rules;

  /// h_P(c) = Z-coordinate of lambda_s(c).
  static ZBlowUpData canonical(int rank);
  /// h_P = 0 for every panel.
  static ZBlowUpData constant(int rank);

  std::int64_t value(const Building& b, const Residue& panel, const GroupElement& c) const;
};

/// Chambers of the windowed ball, adjacent when they share a panel P with
/// |h_P(c) - h_P(d)| <= 1. Labels are the chamber words.
PlainGraph blown_up_ball(const Building& b, const ZBlowUpData& data, const GroupElement& center, int radius,
                         std::optional<std::int64_t> window);

/// True iff c and d are distinct, share a panel and the blow-up values differ by at most one.
bool blown_adjacent(const Building& b, const ZBlowUpData& data, const GroupElement& c, const GroupElement& d);

/// Chambers of the ball at depth < radius whose colours are strictly inside the window.
std::vector<bool> window_interior(const Building& b, const Ball& ball);

/// Every edge of `blown` is an edge of `cg` (same vertex labels in the same order).
bool natural_map_check(const PlainGraph& blown, const PlainGraph& cg);

/// h_P' = h_P o proj_P on every parallel pair of panels meeting the region,
/// sampled on chambers within `span` of the gates.
bool check_compatibility(const Building& b, const ZBlowUpData& data, const Ball& region, std::int64_t span = 3);

struct PanelIsometry {
  Residue panel;
  LocalPerm rho;
};

struct EquivarianceFailure {
  Residue panel;
  std::string reason;
};

struct EquivarianceReport {
  int panels_checked = 0;
  std::vector<PanelIsometry> isometries;
  std::vector<EquivarianceFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Fits rho(g, P) with h_gP o g = rho o h_P on sampled chambers of every panel meeting the region.
EquivarianceReport check_equivariance(const BuildingAutomorphism& g, const ZBlowUpData& data, const Ball& region,
                                      std::int64_t span = 3);

/// Checks rho(g1 g2, P) = rho(g1, g2 P) o rho(g2, P) on the blow-up values of every panel meeting the region.
/// Returns the panels where the rule fails.
std::vector<Residue> check_cocycle(const BuildingAutomorphism& g1, const BuildingAutomorphism& g2,
                                   const ZBlowUpData& data, const Ball& region, std::int64_t span = 3);

/// Window of the Cayley graph of Z/n x Z for the generators (Z/n x {0}) u (Z/n x {1}):
/// vertices (r, level) with level in [-L, L], adjacent iff distinct with levels at most one apart.
struct EnvelopeGraph {
  int n = 0;
  int window = 0;
  PlainGraph graph;
  /// (residue, level) of each vertex.
  std::vector<std::pair<int, int>> vertices;

  bool interior(int v) const { return vertices[v].second > -window && vertices[v].second < window; }
};

EnvelopeGraph envelope_graph(int n, int window);

/// Exact automorphism count by degree-pruned backtracking. Throws BoundExceeded
/// when the window has more than `max_vertices` vertices.
std::uint64_t envelope_automorphism_count(int n, int window, int max_vertices = 24);

/// Exact automorphism count of any small plain graph by backtracking.
std::uint64_t automorphism_count_bruteforce(const PlainGraph& g, int max_vertices = 24);

enum class QuotientKind { Cyclic, Dihedral };

struct EnvelopeDescriptor {
  /// 1: fibre n, 2: fibre 2n.
  int envelope_case = 1;
  std::int64_t fiber = 0;
  QuotientKind quotient = QuotientKind::Cyclic;
};

std::string to_string(QuotientKind q);

/// Canonical envelope of the given case for a two-ended group with finite
/// normal subgroup of order n (Z/n x Z; Z counts as n = 1). Case 2 needs a
/// dihedral quotient, otherwise DihedralRequired.
EnvelopeDescriptor classify_two_ended(const VertexGroupSpec& spec, QuotientKind quotient, int envelope_case = 1);
/// Every canonical envelope available.
std::vector<EnvelopeDescriptor> two_ended_envelopes(const VertexGroupSpec& spec, QuotientKind quotient);

}  // namespace rab

#endif  // RABKIT_BLOWUP_HPP

#ifndef RABKIT_GRAPH_PRODUCT_HPP
#define RABKIT_GRAPH_PRODUCT_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rabkit/graph.hpp"

namespace rab {

/// The vertex group X_s: Z/q, Z, or Z/n x Z.
struct VertexGroupSpec {
  enum class Kind { FiniteCyclic, InfiniteCyclic, TwoEnded };

  Kind kind = Kind::InfiniteCyclic;
  /// q for FiniteCyclic, n for TwoEnded, unused otherwise.
  std::int64_t order = 0;

  static VertexGroupSpec finite(std::int64_t q);
  static VertexGroupSpec infinite() { return {}; }
  static VertexGroupSpec two_ended(std::int64_t n);

  bool is_finite() const { return kind == Kind::FiniteCyclic; }
  friend bool operator==(const VertexGroupSpec&, const VertexGroupSpec&) = default;
};

std::string to_string(const VertexGroupSpec& spec);

/// Element of a vertex group. FiniteCyclic uses `residue` only, InfiniteCyclic
/// uses `z` only, TwoEnded uses both.
struct VertexElement {
  std::int64_t residue = 0;
  std::int64_t z = 0;

  bool is_identity() const { return residue == 0 && z == 0; }
  friend bool operator==(const VertexElement&, const VertexElement&) = default;
  friend auto operator<=>(const VertexElement&, const VertexElement&) = default;
};

/// Canonical representative of `e` in the group described by `spec`.
VertexElement normalize(const VertexGroupSpec& spec, VertexElement e);
VertexElement combine(const VertexGroupSpec& spec, VertexElement a, VertexElement b);
VertexElement inverse(const VertexGroupSpec& spec, VertexElement a);
/// The image of the standard generator x_s raised to k.
VertexElement generator_power(const VertexGroupSpec& spec, std::int64_t k);

struct Syllable {
  Vertex vertex = 0;
  VertexElement element;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// A defining graph together with one vertex group per vertex.
class Presentation : public std::enable_shared_from_this<Presentation> {
 public:
  Presentation(SimplicialGraph graph, std::vector<VertexGroupSpec> specs);

  const SimplicialGraph& graph() const { return graph_; }
  const VertexGroupSpec& spec(Vertex s) const { return specs_[s]; }
  const std::vector<VertexGroupSpec>& specs() const { return specs_; }
  int rank() const { return graph_.order(); }

  /// True iff every vertex group is finite.
  bool all_finite() const;
  bool same_as(const Presentation& other) const;

  /// W(Gamma): the same graph with every vertex group Z/2. Cached.
  std::shared_ptr<const Presentation> coxeter() const;

 private:
  SimplicialGraph graph_;
  std::vector<VertexGroupSpec> specs_;
  mutable std::once_flag coxeter_once_;
  mutable std::shared_ptr<const Presentation> coxeter_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

PresentationPtr make_presentation(SimplicialGraph graph, std::vector<VertexGroupSpec> specs);
/// Right-angled Artin group: every vertex group is Z.
PresentationPtr make_raag(SimplicialGraph graph);
/// Right-angled Coxeter group: every vertex group is Z/2.
PresentationPtr make_racg(SimplicialGraph graph);
/// Every vertex group Z/q.
PresentationPtr make_uniform(SimplicialGraph graph, std::int64_t q);

/// An element of a graph product in canonical reduced syllable form.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(PresentationPtr pres) : pres_(std::move(pres)) {}

  static GroupElement identity(PresentationPtr pres) { return GroupElement(std::move(pres)); }
  /// x_s^k.
  static GroupElement generator(PresentationPtr pres, Vertex s, std::int64_t k = 1);
  static GroupElement syllable(PresentationPtr pres, Vertex s, VertexElement e);

  const PresentationPtr& presentation() const { return pres_; }
  const std::vector<Syllable>& word() const { return word_; }
  bool is_identity() const { return word_.empty(); }
  int length() const { return static_cast<int>(word_.size()); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.word_ == b.word_; }
  /// Shortlex on syllables.
  friend bool operator<(const GroupElement& a, const GroupElement& b);

  std::size_t hash() const;

 private:
  friend GroupElement reduce(const std::vector<Syllable>&, const PresentationPtr&);
  friend GroupElement multiply(const GroupElement&, const GroupElement&);
  friend GroupElement invert(const GroupElement&);
  friend GroupElement from_canonical(PresentationPtr, std::vector<Syllable>);

  PresentationPtr pres_;
  std::vector<Syllable> word_;
};

/// Reduces and canonicalizes an arbitrary syllable sequence.
/// Throws InvalidSyllable for identity syllables or bad vertices.
GroupElement reduce(const std::vector<Syllable>& raw, const PresentationPtr& pres);
/// Throws PresentationMismatch when a and b live in different groups.
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);
inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return multiply(a, b); }

/// Wraps a word already known to be canonical and reduced.
GroupElement from_canonical(PresentationPtr pres, std::vector<Syllable> word);

/// Brings a reduced word into canonical order (front-movable syllable of least vertex first).
std::vector<Syllable> canonical_order(const SimplicialGraph& g, std::vector<Syllable> reduced);

/// The projection rho_s onto X_s.
VertexElement rho(Vertex s, const GroupElement& g);

/// Parity homomorphism G -> W(Gamma). Throws NoParityMap for odd finite vertex groups.
GroupElement coxeterize(const GroupElement& g);
/// Parity of a vertex-group element; throws NoParityMap for odd finite orders.
int parity(const VertexGroupSpec& spec, const VertexElement& e);

int syllable_length(const GroupElement& g);
VertexSet support(const GroupElement& g);

/// Text form, e.g. "s^3 t^-1 u" or "s^[1,-2]" for Z/n x Z; identity prints as "".
std::string to_string(const GroupElement& g);
std::string to_string(const Presentation& pres, const Syllable& syl);
/// Parses the text form. Throws ParseError.
GroupElement parse_word(const PresentationPtr& pres, const std::string& text);

}  // namespace rab

template <>
struct std::hash<rab::GroupElement> {
  std::size_t operator()(const rab::GroupElement& g) const noexcept { return g.hash(); }
};

#endif  // RABKIT_GRAPH_PRODUCT_HPP

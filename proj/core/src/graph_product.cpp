#include "rabkit/graph_product.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rabkit/errors.hpp"

namespace rab {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

VertexGroupSpec VertexGroupSpec::finite(std::int64_t q) {
  if (q < 2) throw ParseError("finite cyclic vertex groups need order >= 2");
  return {Kind::FiniteCyclic, q};
}

VertexGroupSpec VertexGroupSpec::two_ended(std::int64_t n) {
  if (n < 1) throw ParseError("two-ended vertex groups need n >= 1");
  return {Kind::TwoEnded, n};
}

std::string to_string(const VertexGroupSpec& spec) {
  switch (spec.kind) {
    case VertexGroupSpec::Kind::FiniteCyclic:
      return "Z/" + std::to_string(spec.order);
    case VertexGroupSpec::Kind::InfiniteCyclic:
      return "Z";
    case VertexGroupSpec::Kind::TwoEnded:
      return "Z/" + std::to_string(spec.order) + "xZ";
  }
  return "?";
}

VertexElement normalize(const VertexGroupSpec& spec, VertexElement e) {
  switch (spec.kind) {
    case VertexGroupSpec::Kind::FiniteCyclic:
      if (e.z != 0) throw InvalidSyllable("finite cyclic element with a Z coordinate");
      return {mod(e.residue, spec.order), 0};
    case VertexGroupSpec::Kind::InfiniteCyclic:
      if (e.residue != 0) throw InvalidSyllable("infinite cyclic element with a residue");
      return e;
    case VertexGroupSpec::Kind::TwoEnded:
      return {mod(e.residue, spec.order), e.z};
  }
  return e;
}

VertexElement combine(const VertexGroupSpec& spec, VertexElement a, VertexElement b) {
  return normalize(spec, {a.residue + b.residue, a.z + b.z});
}

VertexElement inverse(const VertexGroupSpec& spec, VertexElement a) { return normalize(spec, {-a.residue, -a.z}); }

VertexElement generator_power(const VertexGroupSpec& spec, std::int64_t k) {
  if (spec.kind == VertexGroupSpec::Kind::FiniteCyclic) return normalize(spec, {k, 0});
  return {0, k};
}

// ---------------------------------------------------------------------------

Presentation::Presentation(SimplicialGraph graph, std::vector<VertexGroupSpec> specs)
    : graph_(std::move(graph)), specs_(std::move(specs)) {
  if (static_cast<int>(specs_.size()) != graph_.order()) {
    throw PresentationMismatch("expected " + std::to_string(graph_.order()) + " vertex groups, got " +
                               std::to_string(specs_.size()));
  }
  for (const auto& s : specs_) {
    if (s.kind == VertexGroupSpec::Kind::FiniteCyclic && s.order < 2) throw ParseError("finite order must be >= 2");
    if (s.kind == VertexGroupSpec::Kind::TwoEnded && s.order < 1) throw ParseError("two-ended n must be >= 1");
  }
}

bool Presentation::all_finite() const {
  return std::all_of(specs_.begin(), specs_.end(), [](const auto& s) { return s.is_finite(); });
}

bool Presentation::same_as(const Presentation& other) const {
  return this == &other || (specs_ == other.specs_ && graph_ == other.graph_);
}

std::shared_ptr<const Presentation> Presentation::coxeter() const {
  std::call_once(coxeter_once_, [this] {
    bool already = std::all_of(specs_.begin(), specs_.end(),
                               [](const auto& s) { return s == VertexGroupSpec::finite(2); });
    if (already) {
      coxeter_ = weak_from_this().lock();
      if (coxeter_) return;
    }
    coxeter_ = make_racg(graph_);
  });
  return coxeter_;
}

PresentationPtr make_presentation(SimplicialGraph graph, std::vector<VertexGroupSpec> specs) {
  return std::make_shared<const Presentation>(std::move(graph), std::move(specs));
}

PresentationPtr make_raag(SimplicialGraph graph) {
  std::vector<VertexGroupSpec> specs(graph.order(), VertexGroupSpec::infinite());
  return make_presentation(std::move(graph), std::move(specs));
}

PresentationPtr make_racg(SimplicialGraph graph) { return make_uniform(std::move(graph), 2); }

PresentationPtr make_uniform(SimplicialGraph graph, std::int64_t q) {
  std::vector<VertexGroupSpec> specs(graph.order(), VertexGroupSpec::finite(q));
  return make_presentation(std::move(graph), std::move(specs));
}

// ---------------------------------------------------------------------------

namespace {

// Appends `syl` to a reduced word, merging with the last syllable of the same
// vertex that can be shuffled to the end.
void insert(const Presentation& pres, std::vector<Syllable>& word, const Syllable& syl) {
  const auto& g = pres.graph();
  for (std::size_t j = word.size(); j-- > 0;) {
    if (word[j].vertex == syl.vertex) {
      VertexElement e = combine(pres.spec(syl.vertex), word[j].element, syl.element);
      if (e.is_identity()) {
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        word[j].element = e;
      }
      return;
    }
    if (!g.adjacent(word[j].vertex, syl.vertex)) break;
  }
  word.push_back(syl);
}

void require_same(const GroupElement& a, const GroupElement& b) {
  if (!a.presentation() || !b.presentation() || !a.presentation()->same_as(*b.presentation())) {
    throw PresentationMismatch("group elements belong to different presentations");
  }
}

}  // namespace

std::vector<Syllable> canonical_order(const SimplicialGraph& g, std::vector<Syllable> reduced) {
  std::vector<Syllable> out;
  out.reserve(reduced.size());
  std::vector<bool> taken(reduced.size(), false);
  for (std::size_t emitted = 0; emitted < reduced.size(); ++emitted) {
    VertexSet before = 0;
    std::size_t best = reduced.size();
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      if (taken[i]) continue;
      Vertex v = reduced[i].vertex;
      if ((before & ~g.link(v)) == 0 && (best == reduced.size() || v < reduced[best].vertex)) best = i;
      before |= bit(v);
    }
    taken[best] = true;
    out.push_back(reduced[best]);
  }
  return out;
}

GroupElement GroupElement::generator(PresentationPtr pres, Vertex s, std::int64_t k) {
  if (s < 0 || s >= pres->rank()) throw InvalidSyllable("vertex out of range");
  auto e = generator_power(pres->spec(s), k);
  return syllable(std::move(pres), s, e);
}

GroupElement GroupElement::syllable(PresentationPtr pres, Vertex s, VertexElement e) {
  if (s < 0 || s >= pres->rank()) throw InvalidSyllable("vertex out of range");
  e = normalize(pres->spec(s), e);
  GroupElement g(std::move(pres));
  if (!e.is_identity()) g.word_.push_back({s, e});
  return g;
}

bool operator<(const GroupElement& a, const GroupElement& b) {
  if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
  return a.word_ < b.word_;
}

std::size_t GroupElement::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  };
  for (const auto& s : word_) {
    mix(static_cast<std::uint64_t>(s.vertex));
    mix(static_cast<std::uint64_t>(s.element.residue));
    mix(static_cast<std::uint64_t>(s.element.z));
  }
  return static_cast<std::size_t>(h);
}

GroupElement reduce(const std::vector<Syllable>& raw, const PresentationPtr& pres) {
  GroupElement out(pres);
  for (const auto& syl : raw) {
    if (syl.vertex < 0 || syl.vertex >= pres->rank()) {
      throw InvalidSyllable("syllable vertex " + std::to_string(syl.vertex) + " out of range");
    }
    VertexElement e = normalize(pres->spec(syl.vertex), syl.element);
    if (e.is_identity()) throw InvalidSyllable("identity syllable on vertex " + pres->graph().name(syl.vertex));
    insert(*pres, out.word_, {syl.vertex, e});
  }
  out.word_ = canonical_order(pres->graph(), std::move(out.word_));
  return out;
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  require_same(a, b);
  if (b.is_identity()) return a;
  if (a.is_identity()) return b;
  GroupElement out(a.pres_);
  out.word_ = a.word_;
  for (const auto& syl : b.word_) insert(*a.pres_, out.word_, syl);
  out.word_ = canonical_order(a.pres_->graph(), std::move(out.word_));
  return out;
}

GroupElement invert(const GroupElement& a) {
  GroupElement out(a.pres_);
  out.word_.reserve(a.word_.size());
  for (auto it = a.word_.rbegin(); it != a.word_.rend(); ++it) {
    out.word_.push_back({it->vertex, inverse(a.pres_->spec(it->vertex), it->element)});
  }
  out.word_ = canonical_order(a.pres_->graph(), std::move(out.word_));
  return out;
}

GroupElement from_canonical(PresentationPtr pres, std::vector<Syllable> word) {
  GroupElement out(std::move(pres));
  out.word_ = std::move(word);
  return out;
}

VertexElement rho(Vertex s, const GroupElement& g) {
  const auto& spec = g.presentation()->spec(s);
  VertexElement acc;
  for (const auto& syl : g.word())
    if (syl.vertex == s) acc = combine(spec, acc, syl.element);
  return acc;
}

int parity(const VertexGroupSpec& spec, const VertexElement& e) {
  switch (spec.kind) {
    case VertexGroupSpec::Kind::FiniteCyclic:
      if (spec.order % 2 != 0) {
        throw NoParityMap("Z/" + std::to_string(spec.order) + " has no parity map onto Z/2");
      }
      return static_cast<int>(e.residue % 2);
    case VertexGroupSpec::Kind::InfiniteCyclic:
    case VertexGroupSpec::Kind::TwoEnded:
      return static_cast<int>(mod(e.z, 2));
  }
  return 0;
}

GroupElement coxeterize(const GroupElement& g) {
  auto w = g.presentation()->coxeter();
  std::vector<Syllable> raw;
  for (const auto& syl : g.word())
    if (parity(g.presentation()->spec(syl.vertex), syl.element) == 1) raw.push_back({syl.vertex, {1, 0}});
  return reduce(raw, w);
}

int syllable_length(const GroupElement& g) { return g.length(); }

VertexSet support(const GroupElement& g) {
  VertexSet out = 0;
  for (const auto& syl : g.word()) out |= bit(syl.vertex);
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const Presentation& pres, const Syllable& syl) {
  const auto& spec = pres.spec(syl.vertex);
  std::string out = pres.graph().name(syl.vertex);
  switch (spec.kind) {
    case VertexGroupSpec::Kind::FiniteCyclic:
      if (syl.element.residue != 1) out += "^" + std::to_string(syl.element.residue);
      break;
    case VertexGroupSpec::Kind::InfiniteCyclic:
      if (syl.element.z != 1) out += "^" + std::to_string(syl.element.z);
      break;
    case VertexGroupSpec::Kind::TwoEnded:
      out += "^[" + std::to_string(syl.element.residue) + "," + std::to_string(syl.element.z) + "]";
      break;
  }
  return out;
}

std::string to_string(const GroupElement& g) {
  std::string out;
  for (const auto& syl : g.word()) {
    if (!out.empty()) out += ' ';
    out += to_string(*g.presentation(), syl);
  }
  return out;
}

namespace {

std::int64_t parse_int(std::string_view text, const std::string& token) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("bad exponent in '" + token + "'");
  }
  return value;
}

}  // namespace

GroupElement parse_word(const PresentationPtr& pres, const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::vector<Syllable> raw;
  while (in >> token) {
    auto caret = token.find('^');
    std::string name = token.substr(0, caret);
    auto v = pres->graph().find(name);
    if (!v) throw ParseError("unknown vertex '" + name + "' in word");
    const auto& spec = pres->spec(*v);
    VertexElement e;
    if (caret == std::string::npos) {
      e = generator_power(spec, 1);
    } else {
      std::string_view exp(token);
      exp.remove_prefix(caret + 1);
      if (!exp.empty() && exp.front() == '[') {
        if (exp.back() != ']' || spec.kind != VertexGroupSpec::Kind::TwoEnded) {
          throw ParseError("pair exponent only applies to two-ended vertex groups: '" + token + "'");
        }
        exp = exp.substr(1, exp.size() - 2);
        auto comma = exp.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected [c,k] in '" + token + "'");
        e = {parse_int(exp.substr(0, comma), token), parse_int(exp.substr(comma + 1), token)};
      } else {
        e = generator_power(spec, parse_int(exp, token));
      }
    }
    e = normalize(spec, e);
    if (e.is_identity()) throw ParseError("identity syllable '" + token + "'");
    raw.push_back({*v, e});
  }
  return reduce(raw, pres);
}

}  // namespace rab

#include "rabkit/implosion.hpp"

#include "rabkit/errors.hpp"

namespace rab {

namespace {

Building make_target(const Building& source, const std::vector<ColourClasses>& classes, std::vector<Vertex>& map) {
  const auto& pres = *source.presentation();
  if (static_cast<int>(classes.size()) != source.rank()) throw ParseError("need one colour partition per type");
  VertexSet kept = 0;
  std::vector<VertexGroupSpec> specs;
  map.assign(source.rank(), -1);
  for (Vertex s = 0; s < source.rank(); ++s) {
    if (classes[s].count(pres.spec(s)) == 1) continue;
    kept |= bit(s);
    map[s] = static_cast<Vertex>(specs.size());
    specs.push_back(classes[s].target_spec(pres.spec(s)));
  }
  return Building(make_presentation(pres.graph().induced(kept), std::move(specs)));
}

}  // namespace

ImplosionMap::ImplosionMap(Building source, std::vector<ColourClasses> classes)
    : source_(std::move(source)), classes_(std::move(classes)), target_(make_target(source_, classes_, target_vertex_)) {}

GroupElement ImplosionMap::operator()(const GroupElement& c) const {
  {
    std::lock_guard lock(memo_->mutex);
    auto it = memo_->values.find(c);
    if (it != memo_->values.end()) return it->second;
  }
  const auto& pres = source_.presentation();
  const auto& gamma = source_.graph();
  GroupElement result = target_.base();
  const auto& word = c.word();

  // Each end-movable syllable gives a last gallery step; all must agree.
  bool have = false;
  VertexSet later = 0;
  for (std::size_t i = word.size(); i-- > 0;) {
    Vertex s = word[i].vertex;
    bool movable = (later & ~gamma.link(s)) == 0;
    later |= bit(s);
    if (!movable) continue;
    std::vector<Syllable> rest;
    for (std::size_t j = 0; j < word.size(); ++j)
      if (j != i) rest.push_back(word[j]);
    auto prev = from_canonical(pres, canonical_order(gamma, std::move(rest)));
    auto image = (*this)(prev);
    Vertex t = target_vertex_[s];
    if (t >= 0) {
      const auto& spec = pres->spec(s);
      const auto& tspec = target_.presentation()->spec(t);
      auto before = classes_[s].label(spec, rho(s, prev));
      auto after = classes_[s].label(spec, rho(s, c));
      auto step = combine(tspec, inverse(tspec, before), after);
      if (!step.is_identity()) image = image * GroupElement::syllable(target_.presentation(), t, step);
    }
    if (!have) {
      result = image;
      have = true;
    } else if (!(image == result)) {
      throw InconsistentImplosion("galleries to " + to_string(c) + " disagree: " + to_string(result) + " vs " +
                                  to_string(image));
    }
  }

  std::lock_guard lock(memo_->mutex);
  memo_->values.emplace(c, result);
  return result;
}

std::vector<std::pair<GroupElement, GroupElement>> ImplosionMap::table(const Ball& region) const {
  std::vector<std::pair<GroupElement, GroupElement>> out;
  out.reserve(region.chambers.size());
  for (const auto& c : region.chambers) out.emplace_back(c, (*this)(c));
  return out;
}

ImplosionMap implode(const Building& b, std::vector<ColourClasses> classes, const Ball& region) {
  ImplosionMap tau(b, std::move(classes));
  for (const auto& c : region.chambers) tau(c);
  return tau;
}

std::vector<ColourClasses> parity_classes(const Building& b) {
  std::vector<ColourClasses> out;
  for (Vertex s = 0; s < b.rank(); ++s) {
    const auto& spec = b.presentation()->spec(s);
    if (spec.is_finite() && spec.order % 2 != 0)
      throw NoParityMap("Z/" + std::to_string(spec.order) + " has no parity map");
    out.push_back(ColourClasses::modular(2));
  }
  return out;
}

GroupElement PsiMap::operator()(const GroupElement& x) const {
  auto it = table_.find(x);
  if (it == table_.end()) throw RegionTooSmall("imploded chamber " + to_string(x) + " lies outside the region");
  return it->second;
}

bool PsiMap::is_identity() const {
  for (const auto& [x, y] : table_)
    if (!(x == y)) return false;
  return true;
}

PsiMap psi(const BuildingAutomorphism& g, const ImplosionMap& tau, const Ball& region) {
  PsiMap out;
  for (const auto& c : region.chambers) {
    auto x = tau(c);
    auto y = tau(g.apply(c));
    auto [it, inserted] = out.table_.emplace(x, y);
    if (!inserted && !(it->second == y))
      throw NotWellDefined("psi is not well defined at " + to_string(x) + ": " + to_string(it->second) + " vs " +
                           to_string(y));
  }
  return out;
}

CoxeterImage compose(const CoxeterImage& a, const CoxeterImage& b) {
  std::vector<Syllable> word = b.v.word();
  for (auto& syl : word) syl.vertex = a.pi[syl.vertex];
  const auto& pres = b.v.presentation();
  auto moved = from_canonical(pres, canonical_order(pres->graph(), std::move(word)));
  Permutation pi(b.pi.size());
  for (std::size_t v = 0; v < pi.size(); ++v) pi[v] = a.pi[b.pi[v]];
  return {a.v * moved, pi};
}

CoxeterImage coxeter_projection(const BuildingAutomorphism& g) {
  const Building& b = g.building();
  ImplosionMap tau(b, parity_classes(b));
  auto v = tau(g.apply(b.base()));
  // Re-home the word in W(Gamma) so it composes with coxeterize images.
  auto w = from_canonical(b.presentation()->coxeter(), v.word());
  return {w, g.diagram_permutation()};
}

}  // namespace rab

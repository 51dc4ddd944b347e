#include "rabkit/automorphism.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "rabkit/errors.hpp"

namespace rab {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Vertex panel_type(const Residue& p) {
  if (popcount(p.type) != 1) throw Error("expected a panel");
  return std::countr_zero(p.type);
}

GroupElement relabel(const GroupElement& c, const Permutation& pi) {
  std::vector<Syllable> word = c.word();
  for (auto& syl : word) syl.vertex = pi[syl.vertex];
  const auto& pres = c.presentation();
  return from_canonical(pres, canonical_order(pres->graph(), std::move(word)));
}

GroupElement apply_one(const Building& b, const ElementaryAutomorphism& gen, const GroupElement& c) {
  return std::visit(Overloaded{
                        [&](const Translation& t) { return t.h * c; },
                        [&](const TreeWallPerm& t) {
                          auto p = b.project(t.panel, c);
                          const auto& spec = b.presentation()->spec(t.type);
                          auto a = rho(t.type, p);
                          auto image = normalize(spec, t.f.apply(a));
                          if (image == a) return c;
                          auto p2 = panel_chamber(b, t.panel, image);
                          return p2 * (invert(p) * c);
                        },
                        [&](const DiagramAuto& d) { return relabel(c, d.pi); },
                    },
                    gen);
}

}  // namespace

GroupElement panel_chamber(const Building& b, const Residue& p, const VertexElement& colour) {
  Vertex s = panel_type(p);
  const auto& spec = b.presentation()->spec(s);
  auto step = combine(spec, inverse(spec, rho(s, p.gate)), colour);
  if (step.is_identity()) return p.gate;
  return p.gate * GroupElement::syllable(b.presentation(), s, step);
}

BuildingAutomorphism BuildingAutomorphism::translation(const Building& b, const GroupElement& h) {
  if (!h.presentation() || !h.presentation()->same_as(*b.presentation()))
    throw PresentationMismatch("translation by an element of another group");
  BuildingAutomorphism g(b);
  if (!h.is_identity()) g.word_.push_back(Translation{h});
  return g;
}

BuildingAutomorphism BuildingAutomorphism::tree_wall_perm(const Building& b, const Residue& panel, const LocalPerm& f) {
  Vertex s = panel_type(panel);
  f.validate(b.presentation()->spec(s));
  BuildingAutomorphism g(b);
  if (!f.is_identity()) g.word_.push_back(TreeWallPerm{panel, s, f});
  return g;
}

BuildingAutomorphism BuildingAutomorphism::diagram(const Building& b, const Permutation& pi) {
  const auto& gamma = b.graph();
  if (static_cast<int>(pi.size()) != gamma.order() || !gamma.is_automorphism(pi))
    throw Error("not an automorphism of the type graph");
  for (Vertex v = 0; v < gamma.order(); ++v)
    if (!(b.presentation()->spec(v) == b.presentation()->spec(pi[v])))
      throw Error("diagram automorphism must preserve vertex groups");
  BuildingAutomorphism g(b);
  bool trivial = true;
  for (Vertex v = 0; v < gamma.order(); ++v) trivial = trivial && pi[v] == v;
  if (!trivial) g.word_.push_back(DiagramAuto{pi});
  return g;
}

GroupElement BuildingAutomorphism::apply(const GroupElement& c) const {
  GroupElement x = c;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) x = apply_one(building_, *it, x);
  return x;
}

Permutation BuildingAutomorphism::diagram_permutation() const {
  Permutation pi(building_.rank());
  std::iota(pi.begin(), pi.end(), 0);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    if (const auto* d = std::get_if<DiagramAuto>(&*it))
      for (auto& v : pi) v = d->pi[v];
  }
  return pi;
}

BuildingAutomorphism BuildingAutomorphism::inverse() const {
  BuildingAutomorphism g(building_);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
    g.word_.push_back(std::visit(Overloaded{
                                     [](const Translation& t) -> ElementaryAutomorphism {
                                       return Translation{invert(t.h)};
                                     },
                                     [](const TreeWallPerm& t) -> ElementaryAutomorphism {
                                       return TreeWallPerm{t.panel, t.type, rab::inverse(t.f)};
                                     },
                                     [](const DiagramAuto& d) -> ElementaryAutomorphism {
                                       Permutation inv(d.pi.size());
                                       for (std::size_t v = 0; v < d.pi.size(); ++v) inv[d.pi[v]] = static_cast<Vertex>(v);
                                       return DiagramAuto{inv};
                                     },
                                 },
                                 *it));
  }
  return g;
}

BuildingAutomorphism operator*(const BuildingAutomorphism& a, const BuildingAutomorphism& b) {
  if (!a.building_.presentation()->same_as(*b.building_.presentation()))
    throw PresentationMismatch("composing automorphisms of different buildings");
  BuildingAutomorphism g(a.building_);
  g.word_ = a.word_;
  g.word_.insert(g.word_.end(), b.word_.begin(), b.word_.end());
  return g;
}

std::string to_string(const BuildingAutomorphism& g) {
  const auto& gamma = g.building().graph();
  std::ostringstream os;
  bool first = true;
  for (const auto& gen : g.word()) {
    if (!first) os << " * ";
    first = false;
    std::visit(Overloaded{
                   [&](const Translation& t) { os << "T(" << to_string(t.h) << ")"; },
                   [&](const TreeWallPerm& t) {
                     os << "W(" << gamma.name(t.type) << "@" << to_string(t.panel.gate) << ", " << to_string(t.f) << ")";
                   },
                   [&](const DiagramAuto& d) {
                     os << "D(";
                     for (std::size_t v = 0; v < d.pi.size(); ++v) os << (v ? "," : "") << gamma.name(d.pi[v]);
                     os << ")";
                   },
               },
               gen);
  }
  return first ? "id" : os.str();
}

LocalPerm local_action(const BuildingAutomorphism& g, const Residue& p) {
  const Building& b = g.building();
  Vertex s = panel_type(p);
  Vertex t = g.diagram_permutation()[s];
  const auto& spec = b.presentation()->spec(s);
  auto image = [&](VertexElement a) { return rho(t, g.apply(panel_chamber(b, p, a))); };

  if (spec.is_finite()) {
    std::vector<int> perm(static_cast<std::size_t>(spec.order));
    for (std::int64_t r = 0; r < spec.order; ++r) perm[r] = static_cast<int>(image({r, 0}).residue);
    return LocalPerm::finite(std::move(perm));
  }

  constexpr std::int64_t kSample = 4;
  std::int64_t residues = spec.kind == VertexGroupSpec::Kind::TwoEnded ? spec.order : 1;
  LocalPerm out;
  out.perm.assign(static_cast<std::size_t>(residues), 0);
  auto base = image({0, 0});
  out.shift = base.z;
  std::int64_t slope = image({0, 1}).z - base.z;
  if (slope != 1 && slope != -1) throw NonComputablePanel("local action is not an isometry of the line");
  out.eps = static_cast<int>(slope);
  for (std::int64_t r = 0; r < residues; ++r) out.perm[r] = static_cast<int>(image({r, 0}).residue);
  for (std::int64_t r = 0; r < residues; ++r)
    for (std::int64_t z = -kSample; z <= kSample; ++z)
      if (image({r, z}) != out.apply({r, z})) throw NonComputablePanel("local action is not affine on sampled colours");
  return out;
}

MembershipReport verify_membership(const BuildingAutomorphism& g, const std::vector<LocalActionGroup>& f,
                                   const Ball& region) {
  const Building& b = g.building();
  if (static_cast<int>(f.size()) != b.rank()) throw ParseError("need one local action group per type");
  MembershipReport report;
  std::set<std::pair<Vertex, GroupElement>, std::function<bool(const std::pair<Vertex, GroupElement>&,
                                                                 const std::pair<Vertex, GroupElement>&)>>
      seen([](const auto& x, const auto& y) { return x.first != y.first ? x.first < y.first : x.second < y.second; });
  for (const auto& c : region.chambers) {
    for (Vertex s = 0; s < b.rank(); ++s) {
      auto panel = b.panel(c, s);
      if (!seen.insert({s, panel.gate}).second) continue;
      ++report.panels_checked;
      auto action = local_action(g, panel);
      if (!f[s].contains(action)) report.violations.push_back({panel, action});
    }
  }
  return report;
}

std::vector<int> orbit_census(const std::vector<BuildingAutomorphism>& generators, const Ball& region) {
  std::vector<int> parent(region.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& g : generators) {
    for (int i = 0; i < region.size(); ++i) {
      if (auto j = region.find(g.apply(region.chambers[i]))) {
        int a = find(i), c = find(*j);
        if (a != c) parent[std::max(a, c)] = std::min(a, c);
      }
    }
  }
  std::vector<int> label(region.size(), -1);
  std::vector<int> out(region.size());
  int next = 0;
  for (int i = 0; i < region.size(); ++i) {
    int r = find(i);
    if (label[r] < 0) label[r] = next++;
    out[i] = label[r];
  }
  return out;
}

}  // namespace rab

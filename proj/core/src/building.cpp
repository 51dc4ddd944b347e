#include "rabkit/building.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <tuple>

#include "rabkit/errors.hpp"

namespace rab {

std::optional<int> Ball::find(const GroupElement& c) const {
  auto it = index.find(c);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

Building::Building(PresentationPtr pres) : pres_(std::move(pres)) {
  if (!pres_) throw PresentationMismatch("building needs a presentation");
}

Residue Building::residue(const GroupElement& c, VertexSet type) const {
  const auto& g = graph();
  const auto& word = c.word();
  std::vector<bool> keep(word.size(), true);
  VertexSet kept_after = 0;
  for (std::size_t i = word.size(); i-- > 0;) {
    Vertex v = word[i].vertex;
    if (rab::contains(type, v) && (kept_after & ~g.link(v)) == 0) {
      keep[i] = false;
    } else {
      kept_after |= bit(v);
    }
  }
  std::vector<Syllable> gate;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (keep[i]) gate.push_back(word[i]);
  return {type, from_canonical(pres_, canonical_order(g, std::move(gate)))};
}

bool Building::contains(const Residue& r, const GroupElement& c) const { return residue(c, r.type).gate == r.gate; }

GroupElement Building::project(const Residue& r, const GroupElement& c) const {
  const auto& g = graph();
  auto w = invert(r.gate) * c;
  std::vector<Syllable> head;
  VertexSet skipped = 0;
  for (const auto& syl : w.word()) {
    if (rab::contains(r.type, syl.vertex) && (skipped & ~g.link(syl.vertex)) == 0) {
      head.push_back(syl);
    } else {
      skipped |= bit(syl.vertex);
    }
  }
  return r.gate * from_canonical(pres_, canonical_order(g, std::move(head)));
}

bool Building::parallel(const Residue& p, const Residue& q) const {
  if (popcount(p.type) != 1 || popcount(q.type) != 1) throw Error("parallelism is defined for panels");
  if (p.type != q.type) return false;
  Vertex s = std::countr_zero(p.type);
  return tree_wall(p.gate, s) == tree_wall(q.gate, s);
}

bool Building::parallel_by_projection(const Residue& p, const Residue& q, std::int64_t span) const {
  if (popcount(p.type) != 1 || popcount(q.type) != 1) throw Error("parallelism is defined for panels");
  if (p.type != q.type) return false;
  for (const auto& x : panel_chambers(q, span))
    if (project(q, project(p, x)) != x) return false;
  for (const auto& x : panel_chambers(p, span))
    if (project(p, project(q, x)) != x) return false;
  return true;
}

std::vector<GroupElement> Building::panel_chambers(const Residue& p, std::optional<std::int64_t> span) const {
  if (popcount(p.type) != 1) throw Error("panel_chambers expects a panel");
  Vertex s = std::countr_zero(p.type);
  const auto& spec = pres_->spec(s);
  std::vector<GroupElement> out;
  if (spec.is_finite()) {
    for (std::int64_t r = 0; r < spec.order; ++r) out.push_back(p.gate * GroupElement::syllable(pres_, s, {r, 0}));
    return out;
  }
  if (!span) throw WindowRequired("infinite panel of type " + graph().name(s) + " needs a window");
  std::int64_t residues = spec.kind == VertexGroupSpec::Kind::TwoEnded ? spec.order : 1;
  for (std::int64_t k = -*span; k <= *span; ++k)
    for (std::int64_t r = 0; r < residues; ++r) out.push_back(p.gate * GroupElement::syllable(pres_, s, {r, k}));
  return out;
}

std::vector<VertexElement> Building::colour(const GroupElement& c) const {
  std::vector<VertexElement> out(rank());
  for (const auto& syl : c.word())
    out[syl.vertex] = combine(pres_->spec(syl.vertex), out[syl.vertex], syl.element);
  return out;
}

GroupElement Building::weyl_distance(const GroupElement& c, const GroupElement& d) const {
  auto w = invert(c) * d;
  std::vector<Syllable> types;
  types.reserve(w.word().size());
  for (const auto& syl : w.word()) types.push_back({syl.vertex, {1, 0}});
  return reduce(types, pres_->coxeter());
}

int Building::distance(const GroupElement& c, const GroupElement& d) const { return (invert(c) * d).length(); }

std::vector<GroupElement> Building::minimal_gallery(const GroupElement& c, const GroupElement& d) const {
  auto w = invert(c) * d;
  std::vector<GroupElement> out{c};
  GroupElement cur = c;
  for (const auto& syl : w.word()) {
    cur = cur * GroupElement::syllable(pres_, syl.vertex, syl.element);
    out.push_back(cur);
  }
  return out;
}

bool Building::adjacent(const GroupElement& c, const GroupElement& d, Vertex* type) const {
  auto w = invert(c) * d;
  if (w.length() != 1) return false;
  if (type) *type = w.word().front().vertex;
  return true;
}

Ball Building::ball(const GroupElement& center, int radius, std::optional<std::int64_t> window) const {
  if (radius < 0) throw ParseError("radius must be nonnegative");
  if (window && *window < 0) throw ParseError("window must be nonnegative");
  if (!pres_->all_finite() && !window) {
    throw WindowRequired("infinite vertex groups need a colour window");
  }
  const int n = rank();
  const auto centre_colour = colour(center);

  Ball ball;
  ball.center = center;
  ball.radius = radius;
  ball.window = window;

  struct Frontier {
    GroupElement chamber;
    std::vector<VertexElement> colour;
  };
  std::vector<GroupElement> found{center};
  std::vector<int> depth{0};
  ball.index.emplace(center, 0);
  std::vector<Frontier> frontier{{center, centre_colour}};

  for (int d = 1; d <= radius && !frontier.empty(); ++d) {
    std::vector<Frontier> next;
    for (const auto& f : frontier) {
      for (Vertex s = 0; s < n; ++s) {
        const auto& spec = pres_->spec(s);
        std::vector<VertexElement> steps;
        if (spec.is_finite()) {
          for (std::int64_t r = 1; r < spec.order; ++r) steps.push_back({r, 0});
        } else {
          std::int64_t lo = centre_colour[s].z - *window, hi = centre_colour[s].z + *window;
          std::int64_t residues = spec.kind == VertexGroupSpec::Kind::TwoEnded ? spec.order : 1;
          for (std::int64_t z = lo; z <= hi; ++z)
            for (std::int64_t r = 0; r < residues; ++r) {
              VertexElement step{r, z - f.colour[s].z};
              if (!step.is_identity()) steps.push_back(step);
            }
        }
        for (const auto& step : steps) {
          auto c = f.chamber * GroupElement::syllable(pres_, s, step);
          if (ball.index.count(c)) continue;
          ball.index.emplace(c, -1);
          auto col = f.colour;
          col[s] = combine(spec, col[s], step);
          found.push_back(c);
          depth.push_back(d);
          next.push_back({std::move(c), std::move(col)});
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (depth[a] != depth[b]) return depth[a] < depth[b];
    return found[a] < found[b];
  });
  for (int i : order) {
    ball.index[found[i]] = static_cast<int>(ball.chambers.size());
    ball.chambers.push_back(found[i]);
    ball.depth.push_back(depth[i]);
  }

  // Chambers sharing a panel.
  std::map<std::pair<Vertex, int>, std::vector<int>> groups;
  std::unordered_map<GroupElement, int> gate_ids;
  std::vector<GroupElement> gates;
  for (int i = 0; i < ball.size(); ++i) {
    for (Vertex s = 0; s < n; ++s) {
      auto gate = panel(ball.chambers[i], s).gate;
      auto [it, inserted] = gate_ids.emplace(gate, static_cast<int>(gates.size()));
      if (inserted) gates.push_back(gate);
      groups[{s, it->second}].push_back(i);
    }
  }
  for (const auto& [key, members] : groups) {
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        ball.edges.push_back({members[x], members[y], key.first, gates[key.second]});
  }
  std::sort(ball.edges.begin(), ball.edges.end(), [](const BallEdge& e, const BallEdge& f) {
    return std::tie(e.a, e.b) < std::tie(f.a, f.b);
  });
  return ball;
}

}  // namespace rab

#include "rabkit/blowup.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "rabkit/errors.hpp"

namespace rab {

namespace {

Vertex panel_type(const Residue& p) { return std::countr_zero(p.type); }

std::vector<Residue> panels_meeting(const Building& b, const Ball& region) {
  std::vector<Residue> out;
  std::set<std::pair<Vertex, std::string>> seen;
  for (const auto& c : region.chambers) {
    for (Vertex s = 0; s < b.rank(); ++s) {
      auto p = b.panel(c, s);
      if (seen.insert({s, to_string(p.gate)}).second) out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<GroupElement> samples(const Building& b, const Residue& p, std::int64_t span) {
  return b.panel_chambers(p, span);
}

/// An isometry x -> eps x + b of Z through all (x, y) pairs.
std::optional<LocalPerm> fit_isometry(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  if (pairs.empty()) return LocalPerm::affine(1, 0);
  const auto& [x0, y0] = pairs.front();
  auto other = std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) { return p.first != x0; });
  LocalPerm rho = LocalPerm::affine(1, y0 - x0);
  if (other != pairs.end()) {
    std::int64_t dx = other->first - x0, dy = other->second - y0;
    if (dy == dx) {
      rho = LocalPerm::affine(1, y0 - x0);
    } else if (dy == -dx) {
      rho = LocalPerm::affine(-1, y0 + x0);
    } else {
      return std::nullopt;
    }
  }
  for (const auto& [x, y] : pairs)
    if (rho.eps * x + rho.shift != y) return std::nullopt;
  return rho;
}

struct Transport {
  std::optional<Residue> image;
  std::optional<LocalPerm> rho;
  std::string reason;
};

Transport transport(const BuildingAutomorphism& g, const ZBlowUpData& data, const Residue& p,
                    const std::vector<GroupElement>& chambers) {
  const Building& b = g.building();
  Vertex t = g.diagram_permutation()[panel_type(p)];
  Transport out;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  for (const auto& c : chambers) {
    auto gc = g.apply(c);
    auto q = b.panel(gc, t);
    if (!out.image) {
      out.image = q;
    } else if (!(*out.image == q)) {
      out.reason = "panel is not mapped into a panel";
      return out;
    }
    pairs.emplace_back(data.value(b, p, c), data.value(b, q, gc));
  }
  out.rho = fit_isometry(pairs);
  if (!out.rho) out.reason = "blow-up values are not transported by an isometry";
  return out;
}

}  // namespace

ZBlowUpData ZBlowUpData::canonical(int rank) {
  return {std::vector<Rule>(rank, [](const GroupElement&, const VertexElement& colour) { return colour.z; })};
}

ZBlowUpData ZBlowUpData::constant(int rank) {
  return {std::vector<Rule>(rank, [](const GroupElement&, const VertexElement&) { return std::int64_t{0}; })};
}

std::int64_t ZBlowUpData::value(const Building& b, const Residue& panel, const GroupElement& c) const {
  (void)b;
  Vertex s = panel_type(panel);
  return rules.at(s)(panel.gate, rho(s, c));
}

PlainGraph blown_up_ball(const Building& b, const ZBlowUpData& data, const GroupElement& center, int radius,
                         std::optional<std::int64_t> window) {
  if (static_cast<int>(data.rules.size()) != b.rank()) throw ParseError("need one blow-up rule per type");
  auto ball = b.ball(center, radius, window);
  std::vector<std::string> labels;
  for (const auto& c : ball.chambers) labels.push_back(to_string(c));
  PlainGraph g(std::move(labels));
  for (const auto& e : ball.edges) {
    Residue p{bit(e.type), e.gate};
    auto ha = data.value(b, p, ball.chambers[e.a]);
    auto hb = data.value(b, p, ball.chambers[e.b]);
    if (ha - hb <= 1 && hb - ha <= 1) g.add_edge(e.a, e.b);
  }
  return g;
}

bool blown_adjacent(const Building& b, const ZBlowUpData& data, const GroupElement& c, const GroupElement& d) {
  Vertex s = 0;
  if (!b.adjacent(c, d, &s)) return false;
  auto p = b.panel(c, s);
  auto diff = data.value(b, p, c) - data.value(b, p, d);
  return diff <= 1 && diff >= -1;
}

std::vector<bool> window_interior(const Building& b, const Ball& ball) {
  std::vector<bool> out(ball.size(), false);
  auto centre = b.colour(ball.center);
  for (int i = 0; i < ball.size(); ++i) {
    if (ball.depth[i] >= ball.radius) continue;
    auto col = b.colour(ball.chambers[i]);
    bool inside = true;
    for (Vertex s = 0; s < b.rank() && inside; ++s) {
      if (b.presentation()->spec(s).is_finite() || !ball.window) continue;
      std::int64_t dz = col[s].z - centre[s].z;
      inside = dz < *ball.window && -dz < *ball.window;
    }
    out[i] = inside;
  }
  return out;
}

bool natural_map_check(const PlainGraph& blown, const PlainGraph& cg) {
  if (blown.labels() != cg.labels()) return false;
  for (auto [u, v] : blown.edges())
    if (!cg.adjacent(u, v)) return false;
  return true;
}

bool check_compatibility(const Building& b, const ZBlowUpData& data, const Ball& region, std::int64_t span) {
  auto panels = panels_meeting(b, region);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    for (std::size_t j = 0; j < panels.size(); ++j) {
      if (i == j || panels[i].type != panels[j].type || !b.parallel(panels[i], panels[j])) continue;
      for (const auto& x : samples(b, panels[j], span))
        if (data.value(b, panels[j], x) != data.value(b, panels[i], b.project(panels[i], x))) return false;
    }
  }
  return true;
}

EquivarianceReport check_equivariance(const BuildingAutomorphism& g, const ZBlowUpData& data, const Ball& region,
                                      std::int64_t span) {
  const Building& b = g.building();
  EquivarianceReport report;
  for (const auto& p : panels_meeting(b, region)) {
    ++report.panels_checked;
    auto t = transport(g, data, p, samples(b, p, span));
    if (t.rho) {
      report.isometries.push_back({p, *t.rho});
    } else {
      report.failures.push_back({p, t.reason});
    }
  }
  return report;
}

std::vector<Residue> check_cocycle(const BuildingAutomorphism& g1, const BuildingAutomorphism& g2,
                                   const ZBlowUpData& data, const Ball& region, std::int64_t span) {
  const Building& b = g1.building();
  auto g12 = g1 * g2;
  std::vector<Residue> failures;
  for (const auto& p : panels_meeting(b, region)) {
    auto chambers = samples(b, p, span);
    std::vector<GroupElement> moved;
    for (const auto& c : chambers) moved.push_back(g2.apply(c));
    auto t12 = transport(g12, data, p, chambers);
    auto t2 = transport(g2, data, p, chambers);
    if (!t12.rho || !t2.rho) {
      failures.push_back(p);
      continue;
    }
    auto t1 = transport(g1, data, *t2.image, moved);
    if (!t1.rho) {
      failures.push_back(p);
      continue;
    }
    bool ok = true;
    for (const auto& c : chambers) {
      auto x = data.value(b, p, c);
      auto lhs = t12.rho->eps * x + t12.rho->shift;
      auto mid = t2.rho->eps * x + t2.rho->shift;
      ok = ok && lhs == t1.rho->eps * mid + t1.rho->shift;
    }
    if (!ok) failures.push_back(p);
  }
  return failures;
}

// ---------------------------------------------------------------------------

EnvelopeGraph envelope_graph(int n, int window) {
  if (n < 1 || window < 0) throw ParseError("envelope graphs need n >= 1 and L >= 0");
  EnvelopeGraph e;
  e.n = n;
  e.window = window;
  std::vector<std::string> labels;
  for (int level = -window; level <= window; ++level)
    for (int r = 0; r < n; ++r) {
      e.vertices.push_back({r, level});
      labels.push_back(std::to_string(r) + "@" + std::to_string(level));
    }
  e.graph = PlainGraph(std::move(labels));
  for (std::size_t i = 0; i < e.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < e.vertices.size(); ++j)
      if (std::abs(e.vertices[i].second - e.vertices[j].second) <= 1)
        e.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
  return e;
}

std::uint64_t automorphism_count_bruteforce(const PlainGraph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices) throw BoundExceeded("brute-force automorphism search limited to " +
                                            std::to_string(max_vertices) + " vertices");
  std::vector<int> phi(n, -1);
  std::vector<bool> used(n, false);
  std::uint64_t count = 0;
  auto search = [&](auto&& self, int i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (int d = 0; d < n; ++d) {
      if (used[d] || g.neighbours(d).size() != g.neighbours(i).size()) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.adjacent(i, j) == g.adjacent(d, phi[j]);
      if (!ok) continue;
      phi[i] = d;
      used[d] = true;
      self(self, i + 1);
      used[d] = false;
    }
  };
  search(search, 0);
  return count;
}

std::uint64_t envelope_automorphism_count(int n, int window, int max_vertices) {
  if (static_cast<std::int64_t>(n) * (2 * window + 1) > max_vertices)
    throw BoundExceeded("envelope window too large for brute force");
  return automorphism_count_bruteforce(envelope_graph(n, window).graph, max_vertices);
}

std::string to_string(QuotientKind q) { return q == QuotientKind::Cyclic ? "cyclic" : "dihedral"; }

EnvelopeDescriptor classify_two_ended(const VertexGroupSpec& spec, QuotientKind quotient, int envelope_case) {
  std::int64_t n = 0;
  switch (spec.kind) {
    case VertexGroupSpec::Kind::InfiniteCyclic:
      n = 1;
      break;
    case VertexGroupSpec::Kind::TwoEnded:
      n = spec.order;
      break;
    case VertexGroupSpec::Kind::FiniteCyclic:
      throw ParseError(to_string(spec) + " is not two-ended");
  }
  if (envelope_case == 1) return {1, n, quotient};
  if (envelope_case != 2) throw ParseError("envelope case must be 1 or 2");
  if (quotient != QuotientKind::Dihedral) throw DihedralRequired("the fibre-2n envelope needs a dihedral quotient");
  return {2, 2 * n, quotient};
}

std::vector<EnvelopeDescriptor> two_ended_envelopes(const VertexGroupSpec& spec, QuotientKind quotient) {
  std::vector<EnvelopeDescriptor> out{classify_two_ended(spec, quotient, 1)};
  if (quotient == QuotientKind::Dihedral) out.push_back(classify_two_ended(spec, quotient, 2));
  return out;
}

}  // namespace rab

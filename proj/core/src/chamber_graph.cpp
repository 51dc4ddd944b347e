#include "rabkit/chamber_graph.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <numeric>

#include "rabkit/errors.hpp"

namespace rab {

PlainGraph::PlainGraph(std::vector<std::string> labels) : labels_(std::move(labels)), adj_(labels_.size()) {}

bool PlainGraph::adjacent(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

bool PlainGraph::add_edge(int u, int v) {
  if (u == v) throw Error("plain graphs have no loops");
  if (adjacent(u, v)) return false;
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
  return true;
}

int PlainGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return static_cast<int>(twice / 2);
}

std::vector<std::pair<int, int>> PlainGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

PlainGraph chamber_graph(const Ball& ball) {
  std::vector<std::string> labels;
  labels.reserve(ball.chambers.size());
  for (const auto& c : ball.chambers) labels.push_back(to_string(c));
  PlainGraph g(std::move(labels));
  for (const auto& e : ball.edges) g.add_edge(e.a, e.b);
  return g;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void bron_kerbosch(const PlainGraph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<std::vector<int>>& out) {
  if (p.empty()) {
    if (x.empty()) {
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  // Pivot: vertex of P u X with most neighbours in P.
  int pivot = -1;
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (int u : *set) {
      std::size_t k = intersect(p, g.neighbours(u)).size();
      if (pivot < 0 || k > best) {
        pivot = u;
        best = k;
      }
    }
  std::vector<int> candidates;
  std::set_difference(p.begin(), p.end(), g.neighbours(pivot).begin(), g.neighbours(pivot).end(),
                      std::back_inserter(candidates));
  for (int v : candidates) {
    r.push_back(v);
    bron_kerbosch(g, r, intersect(p, g.neighbours(v)), intersect(x, g.neighbours(v)), out);
    r.pop_back();
    p.erase(std::lower_bound(p.begin(), p.end(), v));
    x.insert(std::lower_bound(x.begin(), x.end(), v), v);
  }
}

}  // namespace

std::vector<std::vector<int>> maximal_cliques(const PlainGraph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> cliques_at(const PlainGraph& g, int v) {
  // Maximal cliques through v are {v} plus maximal cliques of its neighbourhood.
  const auto& nb = g.neighbours(v);
  std::vector<std::string> labels(nb.size());
  PlainGraph local(labels);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.adjacent(nb[i], nb[j])) local.add_edge(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::vector<int>> out;
  if (nb.empty()) {
    out.push_back({v});
    return out;
  }
  for (const auto& c : maximal_cliques(local)) {
    std::vector<int> clique{v};
    for (int i : c) clique.push_back(nb[i]);
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool detect_commuting_types(const PlainGraph& g, int x, int y, int z) {
  if (!g.adjacent(x, y) || !g.adjacent(y, z) || g.adjacent(x, z) || x == z) {
    throw Error("detect_commuting_types expects a bent path x - y - z");
  }
  for (int w : intersect(g.neighbours(x), g.neighbours(z)))
    if (w != y && !g.adjacent(w, y)) return true;
  return false;
}

// ---------------------------------------------------------------------------

std::optional<Vertex> TypedDecoration::edge_type(int u, int v) const {
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto& c = cliques[i];
    if (std::binary_search(c.begin(), c.end(), u) && std::binary_search(c.begin(), c.end(), v)) {
      return clique_type[i];
    }
  }
  return std::nullopt;
}

int TypedDecoration::decorated_count() const {
  return static_cast<int>(std::count(decorated.begin(), decorated.end(), true));
}

std::vector<bool> trusted_vertices(const Building& b, const Ball& ball) {
  const auto& pres = b.presentation();
  const int n = b.rank();
  std::vector<bool> complete(ball.size(), true);
  // Count ball chambers per panel.
  std::map<std::pair<Vertex, int>, int> counts;
  std::unordered_map<GroupElement, int> gate_id;
  std::vector<std::vector<int>> ids(ball.size(), std::vector<int>(n));
  for (int i = 0; i < ball.size(); ++i)
    for (Vertex s = 0; s < n; ++s) {
      auto gate = b.panel(ball.chambers[i], s).gate;
      auto [it, ins] = gate_id.emplace(gate, static_cast<int>(gate_id.size()));
      ids[i][s] = it->second;
      ++counts[{s, it->second}];
    }
  for (int i = 0; i < ball.size(); ++i)
    for (Vertex s = 0; s < n; ++s) {
      const auto& spec = pres->spec(s);
      std::int64_t expected;
      if (spec.is_finite()) {
        expected = spec.order;
      } else {
        std::int64_t residues = spec.kind == VertexGroupSpec::Kind::TwoEnded ? spec.order : 1;
        expected = (2 * ball.window.value_or(0) + 1) * residues;
      }
      if (expected < 2 || counts[{s, ids[i][s]}] != expected) complete[i] = false;
    }
  PlainGraph g = chamber_graph(ball);
  std::vector<bool> trusted(ball.size(), false);
  for (int i = 0; i < ball.size(); ++i) {
    bool ok = complete[i];
    for (int j : g.neighbours(i)) ok = ok && complete[j];
    trusted[i] = ok;
  }
  return trusted;
}

std::vector<Vertex> ground_truth_seed(const Building& b, const Ball& ball, const PlainGraph& g, int v) {
  std::vector<Vertex> out;
  for (const auto& clique : cliques_at(g, v)) {
    int other = clique.front() == v ? clique.back() : clique.front();
    Vertex type = -1;
    if (!b.adjacent(ball.chambers[v], ball.chambers[other], &type)) throw Error("clique is not a panel");
    out.push_back(type);
  }
  return out;
}

namespace {

class Propagator {
 public:
  Propagator(const PlainGraph& g, const SimplicialGraph& gamma, const std::vector<bool>& trusted)
      : g_(g), gamma_(gamma), trusted_(trusted) {
    dec_.cliques = maximal_cliques(g);
    dec_.clique_type.assign(dec_.cliques.size(), std::nullopt);
    dec_.decorated.assign(g.order(), false);
    at_.resize(g.order());
    for (std::size_t i = 0; i < dec_.cliques.size(); ++i)
      for (int v : dec_.cliques[i]) at_[v].push_back(static_cast<int>(i));
  }

  TypedDecoration run(int seed, const std::vector<Vertex>& seed_types) {
    if (seed < 0 || seed >= g_.order() || !trusted_[seed]) throw Error("seed vertex must be trusted");
    if (seed_types.size() != at_[seed].size()) {
      throw InconsistentPropagation("seed assigns " + std::to_string(seed_types.size()) + " types to " +
                                    std::to_string(at_[seed].size()) + " cliques");
    }
    // cliques_at and at_ list the same cliques in the same (sorted) order.
    std::map<int, Vertex> seed_map;
    for (std::size_t i = 0; i < seed_types.size(); ++i) seed_map[at_[seed][i]] = seed_types[i];
    check_local(seed, seed_map);
    commit(seed, seed_map);
    std::deque<int> queue{seed};
    std::vector<bool> ambiguous(g_.order(), false);
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (int d : g_.neighbours(c)) {
        if (!trusted_[d]) continue;
        auto assignment = derive(c, d);
        if (!assignment) {
          if (!dec_.decorated[d] && !ambiguous[d]) {
            ambiguous[d] = true;
            dec_.ambiguous.push_back(d);
          }
          continue;
        }
        bool fresh = !dec_.decorated[d];
        commit(d, *assignment);
        if (fresh) queue.push_back(d);
      }
    }
    std::sort(dec_.ambiguous.begin(), dec_.ambiguous.end());
    dec_.ambiguous.erase(std::remove_if(dec_.ambiguous.begin(), dec_.ambiguous.end(),
                                        [this](int v) { return dec_.decorated[v]; }),
                         dec_.ambiguous.end());
    return std::move(dec_);
  }

 private:
  int shared_clique(int u, int v) const {
    for (int k : at_[u])
      if (std::binary_search(dec_.cliques[k].begin(), dec_.cliques[k].end(), v)) return k;
    throw InconsistentPropagation("edge " + g_.label(u) + " - " + g_.label(v) + " lies in no clique");
  }

  int other_member(int clique, int v) const {
    for (int u : dec_.cliques[clique])
      if (u != v) return u;
    throw InconsistentPropagation("clique of size one at " + g_.label(v));
  }

  bool commute(int v, int a, int b) const {
    return detect_commuting_types(g_, other_member(a, v), v, other_member(b, v));
  }

  // Local consistency: types distinct, complete, and the commutation pattern matches gamma.
  void check_local(int v, const std::map<int, Vertex>& assignment) const {
    VertexSet seen = 0;
    for (auto [k, t] : assignment) {
      if (t < 0 || t >= gamma_.order() || contains(seen, t)) {
        throw InconsistentPropagation("repeated or invalid type at " + g_.label(v));
      }
      seen |= bit(t);
    }
    if (seen != gamma_.all()) throw InconsistentPropagation("incomplete typing at " + g_.label(v));
    for (auto [a, ta] : assignment)
      for (auto [b, tb] : assignment)
        if (a < b && commute(v, a, b) != gamma_.adjacent(ta, tb)) {
          throw InconsistentPropagation("commutation pattern at " + g_.label(v) + " does not match the type graph");
        }
  }

  void commit(int v, const std::map<int, Vertex>& assignment) {
    for (auto [k, t] : assignment) {
      if (dec_.clique_type[k] && *dec_.clique_type[k] != t) {
        throw InconsistentPropagation("clique at " + g_.label(v) + " typed " + gamma_.name(*dec_.clique_type[k]) +
                                      " and " + gamma_.name(t) + " along different paths");
      }
      dec_.clique_type[k] = t;
    }
    dec_.decorated[v] = true;
  }

  // Typing at d derived from the decorated neighbour c; nullopt when ambiguous.
  std::optional<std::map<int, Vertex>> derive(int c, int d) const {
    int shared = shared_clique(c, d);
    Vertex s = *dec_.clique_type[shared];
    std::map<int, Vertex> assignment{{shared, s}};
    std::vector<int> rest;
    for (int l : at_[d]) {
      if (l == shared) continue;
      if (!commute(d, shared, l)) {
        rest.push_back(l);
        continue;
      }
      // Grid: a neighbour y of d in l and c span a square c - d - y - w.
      int y = other_member(l, d);
      int w = -1;
      for (int u : intersect(g_.neighbours(c), g_.neighbours(y)))
        if (u != d && !g_.adjacent(u, d)) w = u;
      if (w < 0) throw InconsistentPropagation("no square through " + g_.label(c) + " and " + g_.label(y));
      auto t = dec_.clique_type[shared_clique(c, w)];
      if (!t) throw InconsistentPropagation("untyped clique at decorated vertex " + g_.label(c));
      assignment[l] = *t;
    }
    VertexSet used = 0;
    for (auto [k, t] : assignment) used |= bit(t);
    std::vector<Vertex> free_types = members(gamma_.all() & ~used);
    if (free_types.size() != rest.size()) {
      throw InconsistentPropagation("type count mismatch at " + g_.label(d));
    }
    std::optional<std::map<int, Vertex>> found;
    int solutions = 0;
    do {
      auto candidate = assignment;
      for (std::size_t i = 0; i < rest.size(); ++i) candidate[rest[i]] = free_types[i];
      try {
        check_local(d, candidate);
      } catch (const InconsistentPropagation&) {
        continue;
      }
      ++solutions;
      if (!found) found = candidate;
    } while (std::next_permutation(free_types.begin(), free_types.end()));
    if (solutions == 0) throw InconsistentPropagation("no typing at " + g_.label(d) + " fits the type graph");
    if (solutions > 1) {
      // Already-typed cliques may pin the choice down.
      int agreeing = 0;
      std::optional<std::map<int, Vertex>> pinned;
      std::sort(free_types.begin(), free_types.end());
      do {
        auto candidate = assignment;
        for (std::size_t i = 0; i < rest.size(); ++i) candidate[rest[i]] = free_types[i];
        bool ok = true;
        for (auto [k, t] : candidate)
          if (!dec_.clique_type[k] || *dec_.clique_type[k] != t) ok = false;
        if (ok) {
          ++agreeing;
          pinned = candidate;
        }
      } while (std::next_permutation(free_types.begin(), free_types.end()));
      if (agreeing == 1) return pinned;
      return std::nullopt;
    }
    return found;
  }

  const PlainGraph& g_;
  const SimplicialGraph& gamma_;
  const std::vector<bool>& trusted_;
  TypedDecoration dec_;
  std::vector<std::vector<int>> at_;
};

}  // namespace

TypedDecoration reconstruct_types(const PlainGraph& g, const SimplicialGraph& gamma, int seed_vertex,
                                  const std::vector<Vertex>& seed_types, const std::vector<bool>& trusted) {
  if (static_cast<int>(trusted.size()) != g.order()) throw Error("trusted mask has the wrong size");
  return Propagator(g, gamma, trusted).run(seed_vertex, seed_types);
}

std::optional<Permutation> match_ground_truth(const TypedDecoration& d, const Building& b, const Ball& ball) {
  const int n = b.rank();
  Permutation pi(n, -1);
  for (std::size_t k = 0; k < d.cliques.size(); ++k) {
    if (!d.clique_type[k]) continue;
    const auto& clique = d.cliques[k];
    Vertex truth = -1;
    if (clique.size() < 2 || !b.adjacent(ball.chambers[clique[0]], ball.chambers[clique[1]], &truth)) {
      return std::nullopt;
    }
    if (pi[truth] >= 0 && pi[truth] != *d.clique_type[k]) return std::nullopt;
    pi[truth] = *d.clique_type[k];
  }
  for (Vertex s = 0; s < n; ++s) {
    if (pi[s] >= 0) continue;
    // Types never seen are left fixed when possible.
    if (std::find(pi.begin(), pi.end(), s) != pi.end()) return std::nullopt;
    pi[s] = s;
  }
  if (!b.graph().is_automorphism(pi)) return std::nullopt;
  return pi;
}

}  // namespace rab

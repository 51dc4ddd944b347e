#include "rabkit/rigidity.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rabkit/errors.hpp"
#include "rabkit/random.hpp"

namespace rab {

SimplicialGraph complement(const SimplicialGraph& g) {
  SimplicialGraph out(g.names());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

bool is_connected(const SimplicialGraph& g) { return g.connected_within(g.all()); }

bool check_r1(const SimplicialGraph& g) {
  for (Vertex s = 0; s < g.order(); ++s)
    if (!g.connected_within(g.all() & ~g.star_of(s))) return false;
  return true;
}

std::vector<std::pair<Vertex, Vertex>> check_r2(const SimplicialGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex s = 0; s < g.order(); ++s)
    for (Vertex t = 0; t < g.order(); ++t)
      if (s != t && (g.link(s) & ~g.star_of(t)) == 0) pairs.emplace_back(s, t);
  return pairs;
}

bool is_irreducible(const SimplicialGraph& g) { return is_connected(complement(g)); }

bool has_dominating_vertex(const SimplicialGraph& g) {
  for (Vertex s = 0; s < g.order(); ++s)
    if (g.star_of(s) == g.all()) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Bounded enumeration

namespace {

struct Enumerator {
  const SimplicialGraph& g;
  std::vector<std::vector<int>> profile;  // degree followed by sorted neighbour degrees
  Permutation perm;
  VertexSet used = 0;
  std::vector<Permutation> out;

  explicit Enumerator(const SimplicialGraph& graph) : g(graph), perm(graph.order(), -1) {
    profile.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      auto& p = profile[v];
      for (Vertex u : members(g.link(v))) p.push_back(g.degree(u));
      std::sort(p.begin(), p.end());
      p.insert(p.begin(), g.degree(v));
    }
  }

  void run(Vertex v) {
    if (v == g.order()) {
      out.push_back(perm);
      return;
    }
    for (Vertex w = 0; w < g.order(); ++w) {
      if (contains(used, w) || profile[v] != profile[w]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(perm[u], w);
      if (!ok) continue;
      perm[v] = w;
      used |= bit(w);
      run(v + 1);
      used &= ~bit(w);
    }
    perm[v] = -1;
  }
};

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<Vertex>(i)) return false;
  return true;
}

}  // namespace

std::vector<Permutation> automorphism_group(const SimplicialGraph& g, int max_vertices) {
  if (g.order() > max_vertices) {
    throw BoundExceeded("exact automorphism enumeration is limited to " + std::to_string(max_vertices) +
                        " vertices (graph has " + std::to_string(g.order()) + ")");
  }
  Enumerator e(g);
  e.run(0);
  return std::move(e.out);
}

bool check_r3(const SimplicialGraph& g, int max_vertices) {
  auto group = automorphism_group(g, max_vertices);
  for (Vertex s = 0; s < g.order(); ++s) {
    VertexSet star = g.star_of(s);
    for (const auto& p : group) {
      if (is_identity(p)) continue;
      bool fixes = true;
      for (Vertex v : members(star)) fixes = fixes && p[v] == v;
      if (fixes) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Individualization-refinement

namespace {

using Colouring = std::vector<int>;

// Refines two colourings of g jointly; false if they stop being compatible.
bool refine(const SimplicialGraph& g, Colouring& ca, Colouring& cb) {
  const int n = g.order();
  auto distinct = [](const Colouring& c) {
    Colouring s = c;
    std::sort(s.begin(), s.end());
    return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
  };
  int cells = distinct(ca);
  for (;;) {
    std::vector<std::vector<int>> sa(n), sb(n);
    auto signature = [&](const Colouring& c, Vertex v) {
      std::vector<int> sig;
      for (Vertex u : members(g.link(v))) sig.push_back(c[u]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), c[v]);
      return sig;
    };
    std::map<std::vector<int>, int> rank;
    for (Vertex v = 0; v < n; ++v) {
      sa[v] = signature(ca, v);
      sb[v] = signature(cb, v);
      rank.emplace(sa[v], 0);
      rank.emplace(sb[v], 0);
    }
    int r = 0;
    for (auto& [sig, id] : rank) id = r++;
    std::vector<int> count(r, 0);
    for (Vertex v = 0; v < n; ++v) {
      ca[v] = rank[sa[v]];
      cb[v] = rank[sb[v]];
      ++count[ca[v]];
      --count[cb[v]];
    }
    for (int c : count)
      if (c != 0) return false;
    int now = distinct(ca);
    if (now == cells) return true;
    cells = now;
  }
}

// Smallest colour class of size > 1, or -1 when discrete.
int target_cell(const Colouring& c) {
  std::vector<int> count(c.size() + 1, 0);
  for (int x : c) ++count[x];
  for (std::size_t i = 0; i < count.size(); ++i)
    if (count[i] > 1) return static_cast<int>(i);
  return -1;
}

int fresh_colour(const Colouring& c) { return *std::max_element(c.begin(), c.end()) + 1; }

std::optional<Permutation> find_isomorphism(const SimplicialGraph& g, Colouring ca, Colouring cb) {
  if (!refine(g, ca, cb)) return std::nullopt;
  const int n = g.order();
  int cell = target_cell(ca);
  if (cell < 0) {
    Permutation perm(n);
    std::vector<Vertex> by_colour(n + 1, -1);
    for (Vertex w = 0; w < n; ++w) by_colour[cb[w]] = w;
    for (Vertex v = 0; v < n; ++v) perm[v] = by_colour[ca[v]];
    if (g.is_automorphism(perm)) return perm;
    return std::nullopt;
  }
  Vertex v = static_cast<Vertex>(std::find(ca.begin(), ca.end(), cell) - ca.begin());
  int fresh = fresh_colour(ca);
  for (Vertex w = 0; w < n; ++w) {
    if (cb[w] != cell) continue;
    Colouring na = ca, nb = cb;
    na[v] = fresh;
    nb[w] = fresh;
    if (auto found = find_isomorphism(g, std::move(na), std::move(nb))) return found;
  }
  return std::nullopt;
}

Colouring fixing_colouring(const SimplicialGraph& g, VertexSet fixed) {
  Colouring c(g.order(), 0);
  int next = 1;
  for (Vertex v : members(fixed & g.all())) c[v] = next++;
  return c;
}

}  // namespace

std::optional<Permutation> nontrivial_automorphism_fixing(const SimplicialGraph& g, VertexSet fixed) {
  if (g.order() == 0) return std::nullopt;
  Colouring c = fixing_colouring(g, fixed);
  for (;;) {
    Colouring copy = c;
    refine(g, c, copy);
    int cell = target_cell(c);
    if (cell < 0) return std::nullopt;
    Vertex v = static_cast<Vertex>(std::find(c.begin(), c.end(), cell) - c.begin());
    int fresh = fresh_colour(c);
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == v || c[w] != cell) continue;
      Colouring ca = c, cb = c;
      ca[v] = fresh;
      cb[w] = fresh;
      if (auto found = find_isomorphism(g, std::move(ca), std::move(cb))) return found;
    }
    c[v] = fresh;
  }
}

std::optional<R3Witness> find_r3_witness(const SimplicialGraph& g) {
  for (Vertex s = 0; s < g.order(); ++s)
    if (auto p = nontrivial_automorphism_fixing(g, g.star_of(s))) return R3Witness{s, std::move(*p)};
  return std::nullopt;
}

std::uint64_t automorphism_count(const SimplicialGraph& g) {
  std::uint64_t total = 1;
  if (g.order() == 0) return total;
  Colouring c(g.order(), 0);
  for (;;) {
    Colouring copy = c;
    refine(g, c, copy);
    int cell = target_cell(c);
    if (cell < 0) return total;
    Vertex v = static_cast<Vertex>(std::find(c.begin(), c.end(), cell) - c.begin());
    int fresh = fresh_colour(c);
    std::uint64_t orbit = 1;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (w == v || c[w] != cell) continue;
      Colouring ca = c, cb = c;
      ca[v] = fresh;
      cb[w] = fresh;
      if (find_isomorphism(g, std::move(ca), std::move(cb))) ++orbit;
    }
    if (__builtin_mul_overflow(total, orbit, &total)) {
      throw BoundExceeded("automorphism group order exceeds 64 bits");
    }
    c[v] = fresh;
  }
}

GraphAnalysis analyze(const SimplicialGraph& g) {
  GraphAnalysis a;
  a.r1 = check_r1(g);
  a.domination_pairs = check_r2(g);
  a.r2 = a.domination_pairs.empty();
  a.r3 = !find_r3_witness(g).has_value();
  a.irreducible = is_irreducible(g);
  a.connected = is_connected(g);
  a.has_dominating_vertex = has_dominating_vertex(g);
  a.automorphism_count = automorphism_count(g);
  return a;
}

SimplicialGraph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParseError("edge probability must lie in [0, 1]");
  SimplicialGraph g(n);
  Xoshiro256 rng(seed);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.uniform() < p) g.add_edge(i, j);
  return g;
}

SurveyResult survey(int n, double p, int trials, std::uint64_t seed) {
  if (trials < 1) throw ParseError("survey needs at least one trial");
  SurveyResult r;
  r.n = n;
  r.p = p;
  r.trials = trials;
  r.seed = seed;
  for (int i = 0; i < trials; ++i) {
    auto g = random_graph(n, p, trial_seed(seed, static_cast<std::uint64_t>(i)));
    bool r1 = check_r1(g);
    bool r2 = check_r2(g).empty();
    bool r3 = !find_r3_witness(g).has_value();
    bool irr = is_irreducible(g);
    r.r1 += r1;
    r.r2 += r2;
    r.r3 += r3;
    r.irreducible += irr;
    r.conjunction += r1 && r2 && r3 && irr;
  }
  return r;
}

}  // namespace rab

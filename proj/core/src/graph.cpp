#include "rabkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "rabkit/errors.hpp"

namespace rab {

int popcount(VertexSet set) { return std::popcount(set); }

bool valid_vertex_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '_' ||
              ch == '.' || ch == '-';
    if (!ok) return false;
  }
  return true;
}

std::vector<Vertex> members(VertexSet set) {
  std::vector<Vertex> out;
  while (set != 0) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

SimplicialGraph::SimplicialGraph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw BoundExceeded("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  names_.reserve(n);
  for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  adjacency_.assign(n, 0);
}

SimplicialGraph::SimplicialGraph(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw BoundExceeded("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_vertex_name(n)) throw ParseError("invalid vertex name '" + n + "'");
    if (!seen.insert(n).second) throw ParseError("duplicate vertex name '" + n + "'");
  }
  adjacency_.assign(names_.size(), 0);
}

SimplicialGraph SimplicialGraph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  SimplicialGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimplicialGraph SimplicialGraph::cycle(int n) {
  SimplicialGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimplicialGraph SimplicialGraph::path(int n) {
  SimplicialGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimplicialGraph SimplicialGraph::complete(int n) {
  SimplicialGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimplicialGraph SimplicialGraph::cube() {
  SimplicialGraph g(8);
  for (int i = 0; i < 8; ++i)
    for (int b : {1, 2, 4})
      if (i < (i ^ b)) g.add_edge(i, i ^ b);
  return g;
}

SimplicialGraph SimplicialGraph::star(int leaves) {
  SimplicialGraph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

void SimplicialGraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) throw ParseError("edge endpoint out of range");
  if (u == v) throw ParseError("self-loop on vertex '" + names_[u] + "'");
  if (adjacent(u, v)) throw ParseError("duplicate edge {" + names_[u] + ", " + names_[v] + "}");
  adjacency_[u] |= bit(v);
  adjacency_[v] |= bit(u);
}

VertexSet SimplicialGraph::all() const {
  return order() == kMaxVertices ? ~VertexSet{0} : (bit(order()) - 1);
}

int SimplicialGraph::edge_count() const {
  int twice = 0;
  for (auto a : adjacency_) twice += popcount(a);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> SimplicialGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : members(adjacency_[u]))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<Vertex> SimplicialGraph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

SimplicialGraph SimplicialGraph::induced(VertexSet subset) const {
  auto verts = members(subset & all());
  std::vector<std::string> names;
  for (auto v : verts) names.push_back(names_[v]);
  SimplicialGraph g(std::move(names));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adjacent(verts[i], verts[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

bool SimplicialGraph::connected_within(VertexSet subset) const {
  subset &= all();
  if (subset == 0) return true;
  VertexSet seen = subset & (~subset + 1);  // lowest member
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (Vertex v : members(frontier)) next |= adjacency_[v];
    next &= subset & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == subset;
}

bool SimplicialGraph::is_automorphism(const std::vector<Vertex>& perm) const {
  if (perm.size() != adjacency_.size()) return false;
  VertexSet image = 0;
  for (auto p : perm) {
    if (p < 0 || p >= order() || contains(image, p)) return false;
    image |= bit(p);
  }
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (adjacent(u, v) != adjacent(perm[u], perm[v])) return false;
  return true;
}

}  // namespace rab

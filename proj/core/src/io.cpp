#include "rabkit/io.hpp"

#include <sstream>

#include <json.hpp>

#include "rabkit/errors.hpp"

namespace rab {

namespace {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("unexpected JSON shape: ") + e.what());
  }
}

Vertex vertex_named(const SimplicialGraph& g, const std::string& name) {
  auto v = g.find(name);
  if (!v) throw ParseError("unknown vertex '" + name + "'");
  return *v;
}

std::string quoted(const std::string& s) { return Json(s).dump(); }

// Eight distinguishable colours; types beyond that cycle.
constexpr const char* kTypeColours[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"};

Json local_perm_json(const LocalPerm& p) {
  Json j = Json::object();
  if (p.perm.size() > 1) j["perm"] = p.perm;
  if (p.eps != 1 || p.shift != 0 || p.perm.size() <= 1) {
    j["eps"] = p.eps;
    j["shift"] = p.shift;
  }
  return j;
}

LocalPerm local_perm_of(const Json& j) {
  if (!j.is_object()) throw ParseError("local permutation must be an object");
  LocalPerm p;
  if (j.contains("perm")) p.perm = j.at("perm").get<std::vector<int>>();
  p.eps = j.value("eps", 1);
  p.shift = j.value("shift", std::int64_t{0});
  if (p.eps != 1 && p.eps != -1) throw ParseError("eps must be 1 or -1");
  return p;
}

}  // namespace

SimplicialGraph graph_from_json(const std::string& text) {
  Json j = parse(text);
  return guarded([&] {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
      throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
    SimplicialGraph g(j.at("vertices").get<std::vector<std::string>>());
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edges must be pairs of vertex names");
      g.add_edge(vertex_named(g, e[0].get<std::string>()), vertex_named(g, e[1].get<std::string>()));
    }
    return g;
  });
}

std::string graph_to_json(const SimplicialGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  Json j;
  j["vertices"] = g.names();
  j["edges"] = edges;
  return j.dump();
}

std::string graph_to_dot(const SimplicialGraph& g) {
  std::ostringstream os;
  os << "graph Gamma {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << quoted(g.name(v)) << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << quoted(g.name(u)) << " -- " << quoted(g.name(v)) << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<VertexGroupSpec> specs_from_json(const std::string& text, const SimplicialGraph& g) {
  Json j = parse(text);
  return guarded([&] {
    if (!j.is_object()) throw ParseError("spec table must be an object keyed by vertex name");
    std::vector<std::optional<VertexGroupSpec>> specs(g.order());
    for (const auto& [name, entry] : j.items()) {
      Vertex v = vertex_named(g, name);
      auto kind = entry.at("kind").get<std::string>();
      if (kind == "FiniteCyclic") {
        specs[v] = VertexGroupSpec::finite(entry.at("q").get<std::int64_t>());
      } else if (kind == "InfiniteCyclic") {
        specs[v] = VertexGroupSpec::infinite();
      } else if (kind == "TwoEnded") {
        specs[v] = VertexGroupSpec::two_ended(entry.at("n").get<std::int64_t>());
      } else {
        throw ParseError("unknown vertex group kind '" + kind + "'");
      }
    }
    std::vector<VertexGroupSpec> out;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!specs[v]) throw ParseError("no vertex group given for '" + g.name(v) + "'");
      out.push_back(*specs[v]);
    }
    return out;
  });
}

std::string specs_to_json(const Presentation& pres) {
  Json j = Json::object();
  for (Vertex v = 0; v < pres.rank(); ++v) {
    const auto& spec = pres.spec(v);
    Json e;
    switch (spec.kind) {
      case VertexGroupSpec::Kind::FiniteCyclic:
        e["kind"] = "FiniteCyclic";
        e["q"] = spec.order;
        break;
      case VertexGroupSpec::Kind::InfiniteCyclic:
        e["kind"] = "InfiniteCyclic";
        break;
      case VertexGroupSpec::Kind::TwoEnded:
        e["kind"] = "TwoEnded";
        e["n"] = spec.order;
        break;
    }
    j[pres.graph().name(v)] = e;
  }
  return j.dump();
}

std::string ball_to_json(const Building& b, const Ball& ball) {
  Json chambers = Json::array();
  for (const auto& c : ball.chambers) chambers.push_back(to_string(c));
  Json edges = Json::array();
  for (const auto& e : ball.edges) {
    Json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["type"] = b.graph().name(e.type);
    je["gate"] = to_string(e.gate);
    edges.push_back(je);
  }
  Json j;
  j["center"] = to_string(ball.center);
  j["radius"] = ball.radius;
  j["window"] = ball.window ? Json(*ball.window) : Json(nullptr);
  j["chambers"] = chambers;
  j["depth"] = ball.depth;
  j["edges"] = edges;
  return j.dump();
}

std::string ball_to_dot(const Building& b, const Ball& ball) {
  std::ostringstream os;
  os << "graph Ball {\n";
  for (int i = 0; i < ball.size(); ++i) os << "  " << i << " [label=" << quoted(to_string(ball.chambers[i])) << "];\n";
  for (const auto& e : ball.edges)
    os << "  " << e.a << " -- " << e.b << " [color=" << kTypeColours[e.type % 8]
       << ", label=" << quoted(b.graph().name(e.type)) << "];\n";
  os << "}\n";
  return os.str();
}

std::string plain_graph_to_json(const PlainGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json j;
  j["vertices"] = g.labels();
  j["edges"] = edges;
  return j.dump();
}

std::string plain_graph_to_dot(const PlainGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.order(); ++v) os << "  " << v << " [label=" << quoted(g.label(v)) << "];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string decoration_to_json(const TypedDecoration& d, const PlainGraph& g, const SimplicialGraph& gamma,
                               const std::optional<Permutation>& diagram) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) {
    auto t = d.edge_type(u, v);
    edges.push_back({u, v, t ? Json(gamma.name(*t)) : Json(nullptr)});
  }
  Json j;
  j["decorated"] = d.decorated_count();
  j["vertices"] = g.order();
  j["edges"] = edges;
  if (diagram) {
    Json pi = Json::array();
    for (auto v : *diagram) pi.push_back(gamma.name(v));
    j["diagram"] = pi;
  } else {
    j["diagram"] = nullptr;
  }
  return j.dump();
}

LocalPerm local_perm_from_json(const std::string& text) {
  Json j = parse(text);
  return guarded([&] { return local_perm_of(j); });
}

std::string local_perm_to_json(const LocalPerm& p) { return local_perm_json(p).dump(); }

BuildingAutomorphism automorphism_from_json(const Building& b, const std::string& text) {
  Json j = parse(text);
  return guarded([&] {
    if (!j.is_array()) throw ParseError("automorphism must be an array of generators");
    const auto& gamma = b.graph();
    BuildingAutomorphism g(b);
    for (const auto& gen : j) {
      if (!gen.is_object() || gen.size() != 1) throw ParseError("each generator is an object with one tag");
      if (gen.contains("translation")) {
        g = g * BuildingAutomorphism::translation(b, b.chamber(gen.at("translation").get<std::string>()));
      } else if (gen.contains("tree_wall")) {
        const auto& tw = gen.at("tree_wall");
        Vertex s = vertex_named(gamma, tw.at("type").get<std::string>());
        auto panel = b.panel(b.chamber(tw.at("gate").get<std::string>()), s);
        g = g * BuildingAutomorphism::tree_wall_perm(b, panel, local_perm_of(tw.at("f")));
      } else if (gen.contains("diagram")) {
        Permutation pi;
        for (const auto& name : gen.at("diagram")) pi.push_back(vertex_named(gamma, name.get<std::string>()));
        g = g * BuildingAutomorphism::diagram(b, pi);
      } else {
        throw ParseError("unknown generator tag");
      }
    }
    return g;
  });
}

std::string automorphism_to_json(const BuildingAutomorphism& g) {
  const auto& gamma = g.building().graph();
  Json out = Json::array();
  for (const auto& gen : g.word()) {
    Json j;
    if (const auto* t = std::get_if<Translation>(&gen)) {
      j["translation"] = to_string(t->h);
    } else if (const auto* w = std::get_if<TreeWallPerm>(&gen)) {
      Json tw;
      tw["gate"] = to_string(w->panel.gate);
      tw["type"] = gamma.name(w->type);
      tw["f"] = local_perm_json(w->f);
      j["tree_wall"] = tw;
    } else {
      Json pi = Json::array();
      for (auto v : std::get<DiagramAuto>(gen).pi) pi.push_back(gamma.name(v));
      j["diagram"] = pi;
    }
    out.push_back(j);
  }
  return out.dump();
}

std::string envelope_to_json(const EnvelopeDescriptor& d) {
  Json j;
  j["case"] = d.envelope_case;
  j["fiber"] = d.fiber;
  j["quotient"] = to_string(d.quotient);
  return j.dump();
}

}  // namespace rab

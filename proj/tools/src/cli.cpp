#include "rabkit/cli.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rabkit/automorphism.hpp"
#include "rabkit/blowup.hpp"
#include "rabkit/building.hpp"
#include "rabkit/chamber_graph.hpp"
#include "rabkit/errors.hpp"
#include "rabkit/implosion.hpp"
#include "rabkit/io.hpp"
#include "rabkit/rigidity.hpp"
#include "rabkit/two_gon.hpp"

namespace rab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = RABKIT_VERSION;

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::string specs_path;
  std::optional<std::int64_t> uniform;
  int radius = 2;
  std::optional<std::int64_t> window;
  std::optional<std::uint64_t> seed;
  int trials = 100;
  int n = 3;
  double p = 0.5;
  std::string center;
  std::string translation;
  std::string automorphism_path;
  std::string local_path;
  std::optional<std::int64_t> modulus;
  std::string data = "canonical";
  std::string quotient = "cyclic";
  std::string format = "json";
  std::string out_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parsed(const std::string& text) { return Json::parse(text); }

Json optional_json(const auto& v) { return v ? Json(*v) : Json(nullptr); }

Json config_json(const RunConfig& c, const Presentation* pres) {
  Json j;
  j["command"] = c.command;
  j["graph"] = c.graph_path.empty() ? Json(nullptr) : Json(c.graph_path);
  j["specs"] = pres ? parsed(specs_to_json(*pres)) : Json(nullptr);
  j["radius"] = c.radius;
  j["window"] = optional_json(c.window);
  j["seed"] = optional_json(c.seed);
  j["trials"] = c.trials;
  j["n"] = c.n;
  j["p"] = c.p;
  j["center"] = c.center;
  j["translation"] = c.translation;
  j["automorphism"] = c.automorphism_path.empty() ? Json(nullptr) : Json(c.automorphism_path);
  j["local"] = c.local_path.empty() ? Json(nullptr) : Json(c.local_path);
  j["modulus"] = optional_json(c.modulus);
  j["data"] = c.data;
  j["quotient"] = c.quotient;
  j["format"] = c.format;
  j["out"] = c.out_path.empty() ? Json(nullptr) : Json(c.out_path);
  return j;
}

/// Everything a command needs besides its own flags.
struct Context {
  const RunConfig& config;
  std::optional<SimplicialGraph> graph;
  std::optional<Building> building;
};

SimplicialGraph load_graph(const RunConfig& c) {
  if (c.graph_path.empty()) throw ParseError("--graph is required");
  return graph_from_json(read_file(c.graph_path));
}

Building load_building(const RunConfig& c, const SimplicialGraph& g) {
  std::vector<VertexGroupSpec> specs;
  if (!c.specs_path.empty()) {
    specs = specs_from_json(read_file(c.specs_path), g);
  } else if (c.uniform) {
    specs.assign(g.order(), VertexGroupSpec::finite(*c.uniform));
  } else {
    specs.assign(g.order(), VertexGroupSpec::infinite());
  }
  return Building(make_presentation(g, std::move(specs)));
}

GroupElement center_of(const Building& b, const RunConfig& c) {
  return c.center.empty() ? b.base() : b.chamber(c.center);
}

Json graph_result(const PlainGraph& g) {
  Json j = parsed(plain_graph_to_json(g));
  j["vertex_count"] = g.order();
  j["edge_count"] = g.edge_count();
  return j;
}

BuildingAutomorphism load_automorphism(const Building& b, const RunConfig& c) {
  if (!c.automorphism_path.empty()) return automorphism_from_json(b, read_file(c.automorphism_path));
  if (!c.translation.empty()) return BuildingAutomorphism::translation(b, b.chamber(c.translation));
  throw ParseError("give --translation WORD or --automorphism PATH");
}

LocalActionGroup local_group(const VertexGroupSpec& spec, const Json& entry) {
  if (entry.contains("group")) {
    auto name = entry.at("group").get<std::string>();
    if (name == "regular") return LocalActionGroup::regular(spec);
    if (spec.is_finite()) {
      if (name == "symmetric") return LocalActionGroup::symmetric(static_cast<int>(spec.order));
    } else {
      if (name == "translations") return LocalActionGroup::line_translations();
      if (name == "isometries") return LocalActionGroup::line_isometries();
    }
    throw ParseError("unknown local action group '" + name + "' for " + to_string(spec));
  }
  if (entry.contains("generators")) {
    if (!spec.is_finite()) throw ParseError("permutation generators need a finite vertex group");
    return LocalActionGroup::finite(static_cast<int>(spec.order),
                                    entry.at("generators").get<std::vector<std::vector<int>>>());
  }
  if (entry.contains("lattice"))
    return LocalActionGroup::line_normal_form(entry.at("lattice").get<std::int64_t>(), entry.value("reflections", false),
                                              entry.value("c0", std::int64_t{0}));
  throw ParseError("local action entries need \"group\", \"generators\" or \"lattice\"");
}

std::vector<LocalActionGroup> load_local_actions(const Building& b, const RunConfig& c) {
  const auto& pres = *b.presentation();
  std::vector<LocalActionGroup> out;
  if (c.local_path.empty()) {
    for (Vertex s = 0; s < b.rank(); ++s) out.push_back(LocalActionGroup::regular(pres.spec(s)));
    return out;
  }
  Json table = parsed(read_file(c.local_path));
  for (Vertex s = 0; s < b.rank(); ++s) {
    const auto& name = b.graph().name(s);
    if (!table.contains(name)) throw ParseError("no local action given for '" + name + "'");
    out.push_back(local_group(pres.spec(s), table.at(name)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands. Each returns either a JSON result or raw text for dot/csv.

struct Output {
  std::optional<Json> json;
  std::string text;
};

Output cmd_analyze(Context& ctx) {
  const auto& g = *ctx.graph;
  if (ctx.config.format == "dot") return {std::nullopt, graph_to_dot(g)};
  auto a = analyze(g);
  Json pairs = Json::array();
  for (auto [u, v] : a.domination_pairs) pairs.push_back({g.name(u), g.name(v)});
  Json j;
  j["vertices"] = g.order();
  j["edges"] = g.edge_count();
  j["r1"] = a.r1;
  j["r2"] = a.r2;
  j["r3"] = a.r3;
  j["irreducible"] = a.irreducible;
  j["connected"] = a.connected;
  j["has_dominating_vertex"] = a.has_dominating_vertex;
  j["domination_pairs"] = pairs;
  j["automorphism_count"] = a.automorphism_count;
  return {j, {}};
}

Output cmd_survey(Context& ctx) {
  const auto& c = ctx.config;
  if (!c.seed) throw ParseError("survey needs --seed");
  auto r = survey(c.n, c.p, c.trials, *c.seed);
  std::vector<std::pair<std::string, int>> rows{
      {"r1", r.r1}, {"r2", r.r2}, {"r3", r.r3}, {"irreducible", r.irreducible}, {"conjunction", r.conjunction}};
  if (c.format == "csv") {
    std::ostringstream os;
    os << "# rabkit " << kVersion << " survey n=" << r.n << " p=" << r.p << " trials=" << r.trials
       << " seed=" << r.seed << "\n";
    os << "condition,count,fraction\n";
    os << std::fixed << std::setprecision(6);
    for (const auto& [name, count] : rows) os << name << "," << count << "," << r.fraction(count) << "\n";
    return {std::nullopt, os.str()};
  }
  Json counts, fractions;
  for (const auto& [name, count] : rows) {
    counts[name] = count;
    fractions[name] = r.fraction(count);
  }
  Json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["counts"] = counts;
  j["fractions"] = fractions;
  return {j, {}};
}

Output cmd_ball(Context& ctx) {
  const auto& b = *ctx.building;
  auto ball = b.ball(center_of(b, ctx.config), ctx.config.radius, ctx.config.window);
  if (ctx.config.format == "dot") return {std::nullopt, ball_to_dot(b, ball)};
  return {parsed(ball_to_json(b, ball)), {}};
}

Output cmd_cayley(Context& ctx) {
  const auto& b = *ctx.building;
  const auto& c = ctx.config;
  ZBlowUpData data;
  if (c.data == "canonical") {
    data = ZBlowUpData::canonical(b.rank());
  } else if (c.data == "constant") {
    data = ZBlowUpData::constant(b.rank());
  } else {
    throw ParseError("--data must be canonical or constant");
  }
  auto g = blown_up_ball(b, data, center_of(b, c), c.radius, c.window);
  if (c.format == "dot") return {std::nullopt, plain_graph_to_dot(g, "BlowUp")};
  return {graph_result(g), {}};
}

Output cmd_implode(Context& ctx) {
  const auto& b = *ctx.building;
  const auto& c = ctx.config;
  std::vector<ColourClasses> classes =
      c.modulus ? std::vector<ColourClasses>(b.rank(), ColourClasses::modular(*c.modulus)) : parity_classes(b);
  auto region = b.ball(center_of(b, c), c.radius, c.window);
  auto tau = implode(b, classes, region);
  auto table = tau.table(region);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "chamber,image\n";
    for (const auto& [x, y] : table) os << to_string(x) << "," << to_string(y) << "\n";
    return {std::nullopt, os.str()};
  }
  Json rows = Json::array();
  for (const auto& [x, y] : table) rows.push_back({to_string(x), to_string(y)});
  Json classes_json = Json::array();
  for (const auto& cl : classes) classes_json.push_back(cl.describe());
  Json j;
  j["classes"] = classes_json;
  j["target_graph"] = parsed(graph_to_json(tau.target().graph()));
  j["target_specs"] = parsed(specs_to_json(*tau.target().presentation()));
  j["table"] = rows;
  return {j, {}};
}

Output cmd_project(Context& ctx) {
  const auto& b = *ctx.building;
  auto g = load_automorphism(b, ctx.config);
  auto alpha = coxeter_projection(g);
  Json pi = Json::array();
  for (auto v : alpha.pi) pi.push_back(b.graph().name(v));
  if (ctx.config.format == "text") {
    std::ostringstream os;
    os << (alpha.v.is_identity() ? "1" : to_string(alpha.v)) << "\n";
    for (std::size_t i = 0; i < alpha.pi.size(); ++i) os << (i ? " " : "") << b.graph().name(alpha.pi[i]);
    os << "\n";
    return {std::nullopt, os.str()};
  }
  Json j;
  j["automorphism"] = parsed(automorphism_to_json(g));
  j["coxeter_word"] = to_string(alpha.v);
  j["diagram"] = pi;
  return {j, {}};
}

Output cmd_check_universal(Context& ctx) {
  const auto& b = *ctx.building;
  const auto& c = ctx.config;
  auto g = load_automorphism(b, c);
  auto f = load_local_actions(b, c);
  auto region = b.ball(center_of(b, c), c.radius, c.window);
  auto report = verify_membership(g, f, region);
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    Json e;
    e["type"] = b.graph().name(std::countr_zero(v.panel.type));
    e["gate"] = to_string(v.panel.gate);
    e["action"] = parsed(local_perm_to_json(v.action));
    violations.push_back(e);
  }
  Json groups = Json::array();
  for (const auto& group : f) groups.push_back(group.describe());
  Json j;
  j["automorphism"] = parsed(automorphism_to_json(g));
  j["local_actions"] = groups;
  j["region_size"] = region.size();
  j["panels_checked"] = report.panels_checked;
  j["member"] = report.ok();
  j["violations"] = violations;
  return {j, {}};
}

Output cmd_reconstruct(Context& ctx) {
  const auto& b = *ctx.building;
  const auto& c = ctx.config;
  auto ball = b.ball(center_of(b, c), c.radius, c.window);
  auto g = chamber_graph(ball);
  auto trusted = trusted_vertices(b, ball);
  auto seed = ground_truth_seed(b, ball, g, 0);
  auto dec = reconstruct_types(g, b.graph(), 0, seed, trusted);
  auto pi = match_ground_truth(dec, b, ball);
  Json j = parsed(decoration_to_json(dec, g, b.graph(), pi));
  j["trusted"] = std::count(trusted.begin(), trusted.end(), true);
  j["ambiguous"] = dec.ambiguous.size();
  j["cliques"] = dec.cliques.size();
  j["matches_ground_truth"] = pi.has_value();
  return {j, {}};
}

Output cmd_two_gon(Context& ctx) {
  auto r = analyze_two_gon(ctx.config.n);
  auto x = make_two_gon(ctx.config.n);
  Json chambers = Json::array();
  for (const auto& h : x.chambers) chambers.push_back(h);
  Json j;
  j["n"] = r.n;
  j["chambers"] = chambers;
  j["universal_order"] = r.universal_order;
  j["f_s_order"] = r.f_s_order;
  j["f_t_order"] = r.f_t_order;
  j["direct_product"] = r.direct_product;
  j["f_s_cyclic"] = r.f_s_cyclic;
  j["regular_order"] = r.regular_order;
  j["regular_is_simply_transitive"] = r.regular_is_simply_transitive;
  j["regular_group"] = two_gon_regular_group(x);
  if (r.violation) {
    Json v;
    v["element"] = r.violation->element;
    v["type"] = r.violation->type == 0 ? "s" : "t";
    v["panel"] = r.violation->panel;
    v["action"] = r.violation->action;
    j["violation"] = v;
  } else {
    j["violation"] = nullptr;
  }
  return {j, {}};
}

Output cmd_envelope(Context& ctx) {
  const auto& c = ctx.config;
  int window = static_cast<int>(c.window.value_or(1));
  auto e = envelope_graph(c.n, window);
  if (c.format == "dot") return {std::nullopt, plain_graph_to_dot(e.graph, "Envelope")};
  QuotientKind q;
  if (c.quotient == "cyclic") {
    q = QuotientKind::Cyclic;
  } else if (c.quotient == "dihedral") {
    q = QuotientKind::Dihedral;
  } else {
    throw ParseError("--quotient must be cyclic or dihedral");
  }
  Json descriptors = Json::array();
  for (const auto& d : two_ended_envelopes(VertexGroupSpec::two_ended(c.n), q)) descriptors.push_back(parsed(envelope_to_json(d)));
  std::set<int> degrees;
  for (int v = 0; v < e.graph.order(); ++v)
    if (e.interior(v)) degrees.insert(static_cast<int>(e.graph.neighbours(v).size()));
  Json j;
  j["n"] = c.n;
  j["window"] = window;
  j["vertices"] = e.graph.order();
  j["edges"] = e.graph.edge_count();
  j["interior_degrees"] = degrees;
  j["automorphism_count"] = envelope_automorphism_count(c.n, window);
  j["envelopes"] = descriptors;
  return {j, {}};
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BoundExceeded*>(&e) || dynamic_cast<const RegionTooSmall*>(&e)) return kBoundError;
  if (dynamic_cast<const InconsistentImplosion*>(&e) || dynamic_cast<const InconsistentPropagation*>(&e) ||
      dynamic_cast<const NotWellDefined*>(&e))
    return kInternalError;
  if (dynamic_cast<const Error*>(&e) || dynamic_cast<const Json::exception*>(&e)) return kInputError;
  return kInternalError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Right-angled buildings, graph products and their automorphisms", "rabkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", c.out_path, "Write the output to a file");
  };
  auto add_building = [&](CLI::App* sub) {
    sub->add_option("--graph", c.graph_path, "Type graph (JSON)")->required();
    auto* specs = sub->add_option("--specs", c.specs_path, "Vertex groups (JSON); default Z everywhere");
    sub->add_option("--uniform", c.uniform, "Use Z/q at every vertex")->check(CLI::Range(2, 1 << 20))->excludes(specs);
    sub->add_option("--center", c.center, "Centre chamber as a word");
  };
  auto add_region = [&](CLI::App* sub) {
    sub->add_option("--radius", c.radius, "Gallery radius")->check(CLI::NonNegativeNumber);
    sub->add_option("--window", c.window, "Colour window for infinite vertex groups")->check(CLI::NonNegativeNumber);
  };
  auto add_automorphism = [&](CLI::App* sub) {
    auto* t = sub->add_option("--translation", c.translation, "Translation by a word");
    sub->add_option("--automorphism", c.automorphism_path, "Automorphism word (JSON)")->excludes(t);
  };

  std::vector<std::pair<CLI::App*, Output (*)(Context&)>> commands;
  auto* analyze_cmd = app.add_subcommand("analyze", "Rigidity conditions of a type graph");
  analyze_cmd->add_option("--graph", c.graph_path, "Type graph (JSON)")->required();
  add_format(analyze_cmd, {"json", "dot"});
  commands.emplace_back(analyze_cmd, cmd_analyze);

  auto* survey_cmd = app.add_subcommand("survey", "Rigidity conditions on seeded random graphs");
  survey_cmd->add_option("--n", c.n, "Vertices")->check(CLI::Range(1, 64));
  survey_cmd->add_option("--p", c.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  survey_cmd->add_option("--trials", c.trials, "Trials")->check(CLI::NonNegativeNumber);
  survey_cmd->add_option("--seed", c.seed, "Seed")->required();
  add_format(survey_cmd, {"json", "csv"});
  commands.emplace_back(survey_cmd, cmd_survey);

  auto* ball_cmd = app.add_subcommand("ball", "Ball in the building");
  add_building(ball_cmd);
  add_region(ball_cmd);
  add_format(ball_cmd, {"json", "dot"});
  commands.emplace_back(ball_cmd, cmd_ball);

  auto* cayley_cmd = app.add_subcommand("cayley", "Blown-up chamber graph of a ball");
  add_building(cayley_cmd);
  add_region(cayley_cmd);
  cayley_cmd->add_option("--data", c.data, "Blow-up data")->check(CLI::IsMember({"canonical", "constant"}));
  add_format(cayley_cmd, {"json", "dot"});
  commands.emplace_back(cayley_cmd, cmd_cayley);

  auto* implode_cmd = app.add_subcommand("implode", "Implosion table of a ball");
  add_building(implode_cmd);
  add_region(implode_cmd);
  implode_cmd->add_option("--mod", c.modulus, "Colour classes mod m (default: parity)")->check(CLI::Range(1, 1 << 20));
  add_format(implode_cmd, {"json", "csv"});
  commands.emplace_back(implode_cmd, cmd_implode);

  auto* project_cmd = app.add_subcommand("project", "Image of an automorphism in the Coxeter group");
  add_building(project_cmd);
  add_automorphism(project_cmd);
  add_format(project_cmd, {"json", "text"});
  commands.emplace_back(project_cmd, cmd_project);

  auto* universal_cmd = app.add_subcommand("check-universal", "Local actions of an automorphism against F");
  add_building(universal_cmd);
  add_region(universal_cmd);
  add_automorphism(universal_cmd);
  universal_cmd->add_option("--local", c.local_path, "Local action groups (JSON); default regular");
  add_format(universal_cmd, {"json"});
  commands.emplace_back(universal_cmd, cmd_check_universal);

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Panel types from the uncoloured chamber graph");
  add_building(reconstruct_cmd);
  add_region(reconstruct_cmd);
  add_format(reconstruct_cmd, {"json"});
  commands.emplace_back(reconstruct_cmd, cmd_reconstruct);

  auto* two_gon_cmd = app.add_subcommand("two-gon", "Universal group of the Sym(n) 2-gon");
  two_gon_cmd->add_option("--n", c.n, "Degree")->check(CLI::Range(2, 4));
  add_format(two_gon_cmd, {"json"});
  commands.emplace_back(two_gon_cmd, cmd_two_gon);

  auto* envelope_cmd = app.add_subcommand("envelope", "Window of the envelope graph of Z/n x Z");
  envelope_cmd->add_option("--n", c.n, "Fibre size")->check(CLI::Range(1, 64));
  envelope_cmd->add_option("--window", c.window, "Levels -L..L")->check(CLI::NonNegativeNumber);
  envelope_cmd->add_option("--quotient", c.quotient, "Quotient kind")->check(CLI::IsMember({"cyclic", "dihedral"}));
  add_format(envelope_cmd, {"json", "dot"});
  commands.emplace_back(envelope_cmd, cmd_envelope);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  for (const auto& [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    c.command = sub->get_name();
    try {
      Context ctx{c, std::nullopt, std::nullopt};
      if (!c.graph_path.empty()) {
        ctx.graph = load_graph(c);
        if (sub != analyze_cmd) ctx.building = load_building(c, *ctx.graph);
      }
      Output result = fn(ctx);
      std::string text = result.text;
      if (result.json) {
        const Presentation* pres = ctx.building ? ctx.building->presentation().get() : nullptr;
        Json doc;
        doc["tool"] = "rabkit";
        doc["version"] = kVersion;
        doc["config"] = config_json(c, pres);
        doc["result"] = *result.json;
        text = doc.dump(2) + "\n";
      }
      if (c.out_path.empty()) {
        out << text;
      } else {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) throw ParseError("cannot write '" + c.out_path + "'");
        file << text;
      }
      return kOk;
    } catch (const std::exception& e) {
      err << "rabkit " << c.command << ": " << e.what() << "\n";
      return exit_code_for(e);
    }
  }
  return kInputError;
}

}  // namespace rab::cli

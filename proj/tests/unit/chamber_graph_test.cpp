#include <gtest/gtest.h>

#include <map>

#include "rabkit/chamber_graph.hpp"
#include "rabkit/errors.hpp"
#include "support.hpp"

using rab::Building;
using rab::PlainGraph;
using rab::VertexGroupSpec;

namespace {

Building rook_building() {
  return Building(rab::make_presentation(testing_support::edge_pair(),
                                         {VertexGroupSpec::finite(3), VertexGroupSpec::finite(4)}));
}

struct Fixture {
  Building building;
  int radius;
};

std::vector<Fixture> fixtures() {
  using rab::SimplicialGraph;
  std::vector<Fixture> out;
  out.push_back({rook_building(), 2});
  out.push_back({Building(rab::make_uniform(testing_support::edgeless(2), 3)), 3});
  out.push_back({Building(rab::make_uniform(testing_support::edgeless(2), 3)), 4});
  out.push_back({Building(rab::make_uniform(SimplicialGraph::path(3), 2)), 4});
  out.push_back({Building(rab::make_uniform(SimplicialGraph::path(3), 3)), 3});
  out.push_back({Building(rab::make_uniform(SimplicialGraph::cycle(4), 2)), 4});
  out.push_back({Building(rab::make_uniform(SimplicialGraph::path(4), 2)), 4});
  out.push_back({Building(rab::make_uniform(testing_support::edgeless(3), 2)), 4});
  out.push_back({Building(rab::make_presentation(SimplicialGraph::star(3),
                                                 {VertexGroupSpec::finite(2), VertexGroupSpec::finite(3),
                                                  VertexGroupSpec::finite(2), VertexGroupSpec::finite(2)})),
                 3});
  return out;
}

}  // namespace

TEST(ChamberGraph, RookGraph) {
  auto b = rook_building();
  auto ball = b.ball(b.base(), 2);
  auto g = rab::chamber_graph(ball);
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.edge_count(), 30);
  for (int v = 0; v < 12; ++v) EXPECT_EQ(g.neighbours(v).size(), 5U);
  std::map<std::size_t, int> sizes;
  for (const auto& c : rab::maximal_cliques(g)) ++sizes[c.size()];
  EXPECT_EQ(sizes, (std::map<std::size_t, int>{{3, 4}, {4, 3}}));
}

TEST(ChamberGraph, SmallCases) {
  Building single(rab::make_presentation(rab::SimplicialGraph(1), {VertexGroupSpec::finite(5)}));
  auto panel = rab::chamber_graph(single.ball(single.base(), 1));
  EXPECT_EQ(panel.edge_count(), 10);
  EXPECT_EQ(rab::maximal_cliques(panel).size(), 1U);
  auto point = rab::chamber_graph(single.ball(single.base(), 0));
  EXPECT_EQ(point.order(), 1);

  PlainGraph c4(std::vector<std::string>(4));
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  auto cliques = rab::maximal_cliques(c4);
  ASSERT_EQ(cliques.size(), 4U);
  for (const auto& c : cliques) EXPECT_EQ(c.size(), 2U);
}

TEST(ChamberGraph, InteriorCliquesArePanels) {
  for (auto& [b, radius] : fixtures()) {
    auto ball = b.ball(b.base(), radius);
    auto g = rab::chamber_graph(ball);
    auto trusted = rab::trusted_vertices(b, ball);
    for (int v = 0; v < g.order(); ++v) {
      if (!trusted[v]) continue;
      auto cliques = rab::cliques_at(g, v);
      ASSERT_EQ(static_cast<int>(cliques.size()), b.rank());
      for (const auto& clique : cliques) {
        rab::Vertex type = -1;
        ASSERT_TRUE(b.adjacent(ball.chambers[clique[0]], ball.chambers[clique[1]], &type));
        auto members = b.panel_chambers(b.panel(ball.chambers[clique[0]], type));
        ASSERT_EQ(members.size(), clique.size());
        for (int u : clique) ASSERT_TRUE(b.contains(b.panel(ball.chambers[v], type), ball.chambers[u]));
      }
    }
  }
}

TEST(DetectCommutingTypes, AgreesWithTypeGraph) {
  for (auto& [b, radius] : fixtures()) {
    auto ball = b.ball(b.base(), radius);
    auto g = rab::chamber_graph(ball);
    auto trusted = rab::trusted_vertices(b, ball);
    int checked = 0;
    for (int y = 0; y < g.order(); ++y) {
      if (!trusted[y]) continue;
      for (int x : g.neighbours(y))
        for (int z : g.neighbours(y)) {
          if (x >= z || g.adjacent(x, z)) continue;
          rab::Vertex s = -1, t = -1;
          b.adjacent(ball.chambers[x], ball.chambers[y], &s);
          b.adjacent(ball.chambers[y], ball.chambers[z], &t);
          ASSERT_NE(s, t);
          ASSERT_EQ(rab::detect_commuting_types(g, x, y, z), b.graph().adjacent(s, t));
          ++checked;
        }
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(DetectCommutingTypes, Examples) {
  auto b = rook_building();
  auto ball = b.ball(b.base(), 2);
  auto g = rab::chamber_graph(ball);
  for (int y = 0; y < g.order(); ++y)
    for (int x : g.neighbours(y))
      for (int z : g.neighbours(y))
        if (x != z && !g.adjacent(x, z)) EXPECT_TRUE(rab::detect_commuting_types(g, x, y, z));

  Building tree(rab::make_uniform(testing_support::edgeless(2), 3));
  auto tball = tree.ball(tree.base(), 3);
  auto tg = rab::chamber_graph(tball);
  for (int y = 0; y < tg.order(); ++y)
    for (int x : tg.neighbours(y))
      for (int z : tg.neighbours(y))
        if (x != z && !tg.adjacent(x, z)) EXPECT_FALSE(rab::detect_commuting_types(tg, x, y, z));
}

TEST(ReconstructTypes, Rook) {
  auto b = rook_building();
  auto ball = b.ball(b.base(), 2);
  auto g = rab::chamber_graph(ball);
  auto trusted = rab::trusted_vertices(b, ball);
  auto seed = rab::ground_truth_seed(b, ball, g, 0);
  auto dec = rab::reconstruct_types(g, b.graph(), 0, seed, trusted);
  EXPECT_EQ(dec.decorated_count(), 12);
  auto pi = rab::match_ground_truth(dec, b, ball);
  ASSERT_TRUE(pi.has_value());
  EXPECT_EQ(*pi, (rab::Permutation{0, 1}));
}

TEST(ReconstructTypes, TreeAndSwappedSeed) {
  Building tree(rab::make_uniform(testing_support::edgeless(2), 3));
  auto ball = tree.ball(tree.base(), 3);
  auto g = rab::chamber_graph(ball);
  auto trusted = rab::trusted_vertices(tree, ball);
  auto seed = rab::ground_truth_seed(tree, ball, g, 0);
  auto dec = rab::reconstruct_types(g, tree.graph(), 0, seed, trusted);
  EXPECT_EQ(dec.decorated_count(), static_cast<int>(std::count(trusted.begin(), trusted.end(), true)));
  EXPECT_EQ(*rab::match_ground_truth(dec, tree, ball), (rab::Permutation{0, 1}));

  std::swap(seed[0], seed[1]);
  auto swapped = rab::reconstruct_types(g, tree.graph(), 0, seed, trusted);
  EXPECT_EQ(swapped.decorated_count(), dec.decorated_count());
  EXPECT_EQ(*rab::match_ground_truth(swapped, tree, ball), (rab::Permutation{1, 0}));
}

TEST(ReconstructTypes, RecoversGroundTruthOnFixtures) {
  for (auto& [b, radius] : fixtures()) {
    auto ball = b.ball(b.base(), radius);
    auto g = rab::chamber_graph(ball);
    auto trusted = rab::trusted_vertices(b, ball);
    auto seed = rab::ground_truth_seed(b, ball, g, 0);
    auto dec = rab::reconstruct_types(g, b.graph(), 0, seed, trusted);
    auto pi = rab::match_ground_truth(dec, b, ball);
    ASSERT_TRUE(pi.has_value());
    int trusted_count = static_cast<int>(std::count(trusted.begin(), trusted.end(), true));
    if (rab::check_r3(b.graph())) {
      EXPECT_EQ(dec.decorated_count(), trusted_count);
      EXPECT_TRUE(dec.ambiguous.empty());
    } else {
      EXPECT_FALSE(dec.ambiguous.empty());
    }
  }
}

TEST(ReconstructTypes, BadSeedIsReported) {
  Building b(rab::make_uniform(rab::SimplicialGraph::path(3), 2));
  auto ball = b.ball(b.base(), 4);
  auto g = rab::chamber_graph(ball);
  auto trusted = rab::trusted_vertices(b, ball);
  auto seed = rab::ground_truth_seed(b, ball, g, 0);
  // Swapping an end with the middle breaks the commutation pattern.
  for (auto& t : seed) t = t == 0 ? 1 : (t == 1 ? 0 : t);
  EXPECT_THROW(rab::reconstruct_types(g, b.graph(), 0, seed, trusted), rab::InconsistentPropagation);
}

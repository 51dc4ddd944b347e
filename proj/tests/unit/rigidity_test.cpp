#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles/graph_oracle.hpp"
#include "rabkit/errors.hpp"
#include "rabkit/random.hpp"
#include "rabkit/rigidity.hpp"
#include "support.hpp"

using rab::SimplicialGraph;
using testing_support::adjacency;

namespace {

SimplicialGraph graph_from_code(int n, unsigned code) {
  SimplicialGraph g(n);
  int bitpos = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bitpos)
      if ((code >> bitpos) & 1U) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST(Complement, Examples) {
  auto c5 = SimplicialGraph::cycle(5);
  auto co = rab::complement(c5);
  EXPECT_EQ(co.edge_count(), 5);
  for (int v = 0; v < 5; ++v) EXPECT_EQ(co.degree(v), 2);
  EXPECT_TRUE(rab::is_connected(co));

  EXPECT_EQ(rab::complement(SimplicialGraph::complete(4)).edge_count(), 0);
  EXPECT_EQ(rab::complement(SimplicialGraph(1)).order(), 1);
}

TEST(Complement, IsAnInvolution) {
  for (unsigned code = 0; code < (1U << 10); ++code) {
    auto g = graph_from_code(5, code);
    EXPECT_EQ(rab::complement(rab::complement(g)), g);
  }
}

TEST(R1, Examples) {
  EXPECT_TRUE(rab::check_r1(SimplicialGraph::cycle(5)));
  EXPECT_TRUE(rab::check_r1(SimplicialGraph::path(3)));
  auto p4 = SimplicialGraph::path(4);
  EXPECT_EQ(rab::check_r1(p4), oracle::r1(adjacency(p4)));
  EXPECT_TRUE(rab::check_r1(p4));
}

TEST(R2, Examples) {
  EXPECT_TRUE(rab::check_r2(SimplicialGraph::cycle(5)).empty());
  auto p3 = SimplicialGraph::path(3);
  auto pairs = rab::check_r2(p3);
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), std::pair{0, 1}), pairs.end());
  auto e2 = rab::check_r2(SimplicialGraph(2));
  EXPECT_EQ(e2, (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(rab::automorphism_group(SimplicialGraph::cycle(5)).size(), 10U);
  EXPECT_EQ(rab::automorphism_group(SimplicialGraph(3)).size(), 6U);
  auto cube = SimplicialGraph::cube();
  auto expected = oracle::automorphisms(adjacency(cube)).size();
  EXPECT_EQ(expected, 48U);
  EXPECT_EQ(rab::automorphism_group(cube).size(), expected);
  EXPECT_EQ(rab::automorphism_count(cube), expected);
  EXPECT_THROW(rab::automorphism_group(SimplicialGraph::cycle(13)), rab::BoundExceeded);
  EXPECT_EQ(rab::automorphism_count(SimplicialGraph::cycle(13)), 26U);
}

TEST(Automorphisms, GroupAxiomsUpToSixVertices) {
  for (int n = 1; n <= 6; ++n) {
    const unsigned codes = 1U << (n * (n - 1) / 2);
    for (unsigned code = 0; code < codes; code += (n == 6 ? 97 : 1)) {
      auto g = graph_from_code(n, code);
      auto group = rab::automorphism_group(g);
      std::set<rab::Permutation> set(group.begin(), group.end());
      ASSERT_EQ(set.size(), group.size());
      ASSERT_TRUE(std::is_sorted(group.begin(), group.end()));
      rab::Permutation id(n);
      for (int i = 0; i < n; ++i) id[i] = i;
      ASSERT_TRUE(set.count(id));
      for (const auto& a : group) {
        rab::Permutation inv(n);
        for (int i = 0; i < n; ++i) inv[a[i]] = i;
        ASSERT_TRUE(set.count(inv));
        for (const auto& b : group) {
          rab::Permutation ab(n);
          for (int i = 0; i < n; ++i) ab[i] = a[b[i]];
          ASSERT_TRUE(set.count(ab));
        }
      }
      ASSERT_EQ(group.size(), oracle::automorphisms(adjacency(g)).size());
      ASSERT_EQ(rab::automorphism_count(g), group.size());
    }
  }
}

TEST(Automorphisms, VertexTransitiveOrdersDivisible) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(rab::automorphism_group(SimplicialGraph::cycle(n)).size() % n, 0U);
    EXPECT_EQ(rab::automorphism_group(SimplicialGraph::complete(n)).size() % n, 0U);
  }
}

TEST(R3, Examples) {
  EXPECT_TRUE(rab::check_r3(SimplicialGraph::cycle(5)));
  EXPECT_TRUE(rab::check_r3(SimplicialGraph::cube()));
  EXPECT_FALSE(rab::check_r3(SimplicialGraph(3)));
  auto w = rab::find_r3_witness(SimplicialGraph(3));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->vertex, 0);
  EXPECT_EQ(w->automorphism, (rab::Permutation{0, 2, 1}));
}

TEST(R3, AgreesWithOracleOnAllSmallGraphs) {
  for (int n = 1; n <= 5; ++n) {
    for (unsigned code = 0; code < (1U << (n * (n - 1) / 2)); ++code) {
      auto g = graph_from_code(n, code);
      auto adj = adjacency(g);
      bool expected = oracle::r3(adj);
      ASSERT_EQ(rab::check_r3(g), expected) << "n=" << n << " code=" << code;
      ASSERT_EQ(!rab::find_r3_witness(g).has_value(), expected) << "n=" << n << " code=" << code;
      ASSERT_EQ(rab::check_r1(g), oracle::r1(adj));
      ASSERT_EQ(rab::check_r2(g).empty(), oracle::r2(adj));
      ASSERT_EQ(rab::is_irreducible(g), oracle::irreducible(adj));
    }
  }
}

TEST(R3, RefinementMatchesEnumerationOnRandomGraphs) {
  rab::Xoshiro256 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng.below(7));
    double p = 0.2 + 0.6 * rng.uniform();
    auto g = rab::random_graph(n, p, rng.next());
    auto witness = rab::find_r3_witness(g);
    ASSERT_EQ(rab::check_r3(g), !witness.has_value());
    if (witness) {
      ASSERT_TRUE(g.is_automorphism(witness->automorphism));
      bool moved = false;
      for (int v = 0; v < n; ++v) {
        if (rab::contains(g.star_of(witness->vertex), v)) ASSERT_EQ(witness->automorphism[v], v);
        moved = moved || witness->automorphism[v] != v;
      }
      ASSERT_TRUE(moved);
    }
    ASSERT_EQ(rab::automorphism_count(g), rab::automorphism_group(g).size());
  }
}

TEST(Irreducible, Examples) {
  EXPECT_TRUE(rab::is_irreducible(SimplicialGraph::cycle(5)));
  EXPECT_FALSE(rab::is_irreducible(SimplicialGraph::cycle(4)));
  EXPECT_FALSE(rab::is_irreducible(SimplicialGraph::complete(2)));
  EXPECT_TRUE(rab::is_irreducible(SimplicialGraph(1)));
}

TEST(DominatingVertex, Examples) {
  EXPECT_TRUE(rab::has_dominating_vertex(SimplicialGraph::complete(3)));
  EXPECT_FALSE(rab::has_dominating_vertex(SimplicialGraph::cycle(5)));
  EXPECT_TRUE(rab::has_dominating_vertex(SimplicialGraph::star(3)));
}

TEST(Analysis, LemmaConnectedOnSamples) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = rab::random_graph(9, 0.5, seed);
    auto a = rab::analyze(g);
    EXPECT_EQ(a.r2, a.domination_pairs.empty());
    if (a.r1 && a.r2) EXPECT_TRUE(a.connected);
  }
}

TEST(RandomGraph, Examples) {
  EXPECT_EQ(rab::random_graph(0, 0.5, 1).order(), 0);
  EXPECT_EQ(rab::random_graph(5, 1.0, 7), SimplicialGraph::complete(5));
  EXPECT_EQ(rab::random_graph(5, 0.0, 7), SimplicialGraph(5));
  EXPECT_EQ(rab::random_graph(12, 0.5, 99), rab::random_graph(12, 0.5, 99));
  EXPECT_THROW(rab::random_graph(3, 1.5, 1), rab::ParseError);
}

TEST(Survey, Examples) {
  EXPECT_EQ(rab::survey(5, 1.0, 10, 1).conjunction, 0);
  EXPECT_EQ(rab::survey(2, 0.5, 100, 3).conjunction, 0);
  auto a = rab::survey(8, 0.5, 20, 5);
  auto b = rab::survey(8, 0.5, 20, 5);
  EXPECT_EQ(a.conjunction, b.conjunction);
  EXPECT_EQ(a.r3, b.r3);
}

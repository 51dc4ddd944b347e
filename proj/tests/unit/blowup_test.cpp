#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles/word_oracle.hpp"
#include "rabkit/blowup.hpp"
#include "rabkit/errors.hpp"
#include "rabkit/random.hpp"
#include "support.hpp"

using rab::Building;
using rab::BuildingAutomorphism;
using rab::GroupElement;
using rab::LocalPerm;
using rab::SimplicialGraph;
using rab::VertexGroupSpec;
using rab::ZBlowUpData;

namespace {

std::vector<SimplicialGraph> raag_graphs() {
  return {testing_support::edge_pair(), testing_support::edgeless(2), SimplicialGraph::path(3)};
}

oracle::Word to_oracle(const GroupElement& g) {
  oracle::Word w;
  for (const auto& s : g.word()) w.emplace_back(static_cast<int>(s.vertex), static_cast<long>(s.element.z));
  return w;
}

std::set<std::pair<int, int>> edge_set(const rab::PlainGraph& g) {
  auto e = g.edges();
  return {e.begin(), e.end()};
}

BuildingAutomorphism random_isometric_generator(const Building& b, const rab::Ball& near, rab::Xoshiro256& rng) {
  const auto& c = near.chambers[rng.below(near.size())];
  switch (rng.below(3)) {
    case 0:
      return BuildingAutomorphism::translation(b, c);
    case 1: {
      auto s = static_cast<rab::Vertex>(rng.below(b.rank()));
      return BuildingAutomorphism::tree_wall_perm(b, b.panel(c, s),
                                                  LocalPerm::affine(-1, static_cast<std::int64_t>(rng.below(3)) - 1));
    }
    default: {
      auto auts = rab::automorphism_group(b.graph());
      return BuildingAutomorphism::diagram(b, auts[rng.below(auts.size())]);
    }
  }
}

}  // namespace

TEST(BlowUp, CanonicalDataGivesCayleyGraph) {
  for (const auto& gamma : raag_graphs()) {
    Building b(rab::make_raag(gamma));
    auto ball = b.ball(b.base(), 3, 3);
    auto blown = rab::blown_up_ball(b, ZBlowUpData::canonical(b.rank()), b.base(), 3, 3);

    oracle::IncrementalCanonicalizer canon(oracle::Cyclic{testing_support::adjacency(gamma),
                                                          std::vector<long>(gamma.order(), 0)});
    std::map<oracle::Word, int> index;
    std::vector<oracle::Word> words;
    for (int i = 0; i < ball.size(); ++i) {
      words.push_back(canon.group().canonical(to_oracle(ball.chambers[i])));
      index.emplace(words.back(), i);
    }
    ASSERT_EQ(static_cast<int>(index.size()), ball.size());

    std::set<std::pair<int, int>> expected;
    for (int i = 0; i < ball.size(); ++i)
      for (int s = 0; s < gamma.order(); ++s)
        for (long e : {-1L, 1L}) {
          auto it = index.find(canon.append(words[i], {s, e}));
          if (it != index.end()) expected.insert(std::minmax(i, it->second));
        }
    EXPECT_EQ(edge_set(blown), expected);

    // The Cayley ball of radius 3 lies inside the windowed chamber ball.
    std::set<oracle::Word> frontier{oracle::Word{}}, seen = frontier;
    for (int r = 0; r < 3; ++r) {
      std::set<oracle::Word> next;
      for (const auto& w : frontier)
        for (int s = 0; s < gamma.order(); ++s)
          for (long e : {-1L, 1L}) {
            auto v = canon.append(w, {s, e});
            if (seen.insert(v).second) next.insert(v);
          }
      frontier = std::move(next);
    }
    for (const auto& w : seen) EXPECT_TRUE(index.contains(w));
  }
}

TEST(BlowUp, InteriorDegreeIsTwiceRank) {
  for (const auto& gamma : raag_graphs()) {
    Building b(rab::make_raag(gamma));
    auto ball = b.ball(b.base(), 3, 3);
    auto blown = rab::blown_up_ball(b, ZBlowUpData::canonical(b.rank()), b.base(), 3, 3);
    auto interior = rab::window_interior(b, ball);
    int checked = 0;
    for (int v = 0; v < ball.size(); ++v) {
      if (!interior[v]) continue;
      ++checked;
      EXPECT_EQ(static_cast<int>(blown.neighbours(v).size()), 2 * b.rank()) << rab::to_string(ball.chambers[v]);
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(BlowUp, ConstantDataGivesChamberGraph) {
  Building raag(rab::make_raag(SimplicialGraph::path(3)));
  auto ball = raag.ball(raag.base(), 2, 2);
  EXPECT_EQ(rab::blown_up_ball(raag, ZBlowUpData::constant(3), raag.base(), 2, 2), rab::chamber_graph(ball));

  Building finite(rab::make_uniform(SimplicialGraph::cycle(4), 3));
  auto fball = finite.ball(finite.base(), 3);
  EXPECT_EQ(rab::blown_up_ball(finite, ZBlowUpData::canonical(4), finite.base(), 3, std::nullopt),
            rab::chamber_graph(fball));
}

TEST(BlowUp, NaturalMapIntoChamberGraph) {
  Building b(rab::make_raag(SimplicialGraph::path(3)));
  auto ball = b.ball(b.base(), 3, 3);
  auto blown = rab::blown_up_ball(b, ZBlowUpData::canonical(3), b.base(), 3, 3);
  auto cg = rab::chamber_graph(ball);
  EXPECT_TRUE(rab::natural_map_check(blown, cg));
  EXPECT_LT(blown.edge_count(), cg.edge_count());

  auto broken = blown;
  bool added = false;
  for (int u = 0; u < ball.size() && !added; ++u)
    for (int v = u + 1; v < ball.size() && !added; ++v)
      if (!b.adjacent(ball.chambers[u], ball.chambers[v])) added = broken.add_edge(u, v);
  ASSERT_TRUE(added);
  EXPECT_FALSE(rab::natural_map_check(broken, cg));
}

TEST(BlowUp, WindowRequiredForInfiniteTypes) {
  Building b(rab::make_raag(testing_support::edge_pair()));
  EXPECT_THROW(rab::blown_up_ball(b, ZBlowUpData::canonical(2), b.base(), 2, std::nullopt), rab::WindowRequired);
}

TEST(BlowUp, Compatibility) {
  Building b(rab::make_raag(SimplicialGraph::path(3)));
  auto region = b.ball(b.base(), 2, 2);
  EXPECT_TRUE(rab::check_compatibility(b, ZBlowUpData::canonical(3), region));
  EXPECT_TRUE(rab::check_compatibility(b, ZBlowUpData::constant(3), region));

  auto gate_dependent = ZBlowUpData::canonical(3);
  gate_dependent.rules[0] = [](const GroupElement& gate, const rab::VertexElement& colour) {
    return colour.z + gate.length();
  };
  EXPECT_FALSE(rab::check_compatibility(b, gate_dependent, region));
}

TEST(BlowUp, GeneratorsPreserveBlownAdjacency) {
  rab::Xoshiro256 rng(11);
  for (const auto& gamma : raag_graphs()) {
    Building b(rab::make_raag(gamma));
    auto data = ZBlowUpData::canonical(b.rank());
    auto region = b.ball(b.base(), 3, 3);
    auto near = b.ball(b.base(), 1, 1);
    for (int trial = 0; trial < 6; ++trial) {
      auto g = random_isometric_generator(b, near, rng);
      std::vector<GroupElement> image;
      for (const auto& c : region.chambers) image.push_back(g.apply(c));
      for (int i = 0; i < region.size(); ++i)
        for (int j = i + 1; j < region.size(); ++j) {
          const auto& c = region.chambers[i];
          const auto& d = region.chambers[j];
          ASSERT_EQ(rab::blown_adjacent(b, data, c, d), rab::blown_adjacent(b, data, image[i], image[j]))
              << rab::to_string(g) << " on " << rab::to_string(c) << ", " << rab::to_string(d);
        }
    }
  }
}

TEST(BlowUp, EquivarianceAndCocycle) {
  rab::Xoshiro256 rng(12);
  Building b(rab::make_raag(SimplicialGraph::path(3)));
  auto data = ZBlowUpData::canonical(3);
  auto region = b.ball(b.base(), 2, 2);
  auto near = b.ball(b.base(), 1, 1);
  for (int trial = 0; trial < 8; ++trial) {
    auto g1 = random_isometric_generator(b, near, rng);
    auto g2 = random_isometric_generator(b, near, rng);
    auto report = rab::check_equivariance(g1, data, region);
    EXPECT_TRUE(report.ok()) << rab::to_string(g1);
    EXPECT_EQ(static_cast<int>(report.isometries.size()), report.panels_checked);
    EXPECT_TRUE(rab::check_cocycle(g1, g2, data, region).empty()) << rab::to_string(g1) << " / " << rab::to_string(g2);
  }

  // A translation moves panel values by the colour of the translating element.
  auto t = BuildingAutomorphism::translation(b, b.chamber("0^2"));
  auto report = rab::check_equivariance(t, data, region);
  for (const auto& iso : report.isometries) {
    if (iso.panel == b.panel(b.base(), 0)) EXPECT_EQ(iso.rho, LocalPerm::affine(1, 2));
  }
}

TEST(BlowUp, EquivarianceFailureDetected) {
  Building b(rab::make_raag(testing_support::edgeless(2)));
  auto squared = ZBlowUpData::canonical(2);
  for (auto& rule : squared.rules)
    rule = [](const GroupElement&, const rab::VertexElement& colour) { return colour.z * colour.z; };
  auto region = b.ball(b.base(), 1, 1);
  auto report = rab::check_equivariance(BuildingAutomorphism::translation(b, b.chamber("0")), squared, region);
  EXPECT_FALSE(report.ok());
}

TEST(Envelope, GraphShape) {
  for (int n = 1; n <= 4; ++n) {
    auto e = rab::envelope_graph(n, 2);
    EXPECT_EQ(e.graph.order(), 5 * n);
    for (int v = 0; v < e.graph.order(); ++v)
      if (e.interior(v)) EXPECT_EQ(static_cast<int>(e.graph.neighbours(v).size()), 3 * n - 1);
  }
}

TEST(Envelope, AutomorphismCountsMatchExhaustiveSearch) {
  for (auto [n, window] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}}) {
    auto e = rab::envelope_graph(n, window);
    const int order = e.graph.order();
    std::vector<int> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t expected = 0;
    do {
      bool ok = true;
      for (int u = 0; u < order && ok; ++u)
        for (int v = u + 1; v < order && ok; ++v) ok = e.graph.adjacent(u, v) == e.graph.adjacent(perm[u], perm[v]);
      if (ok) ++expected;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(rab::envelope_automorphism_count(n, window), expected) << n << "," << window;
  }
  EXPECT_EQ(rab::envelope_automorphism_count(1, 1), 2u);
  EXPECT_EQ(rab::envelope_automorphism_count(2, 1), 16u);
  EXPECT_EQ(rab::envelope_automorphism_count(3, 1), 432u);
  EXPECT_THROW(rab::envelope_automorphism_count(5, 3), rab::BoundExceeded);
}

TEST(Envelope, TwoEndedClassification) {
  auto z = VertexGroupSpec::infinite();
  auto d1 = rab::classify_two_ended(z, rab::QuotientKind::Cyclic);
  EXPECT_EQ(d1.envelope_case, 1);
  EXPECT_EQ(d1.fiber, 1);
  EXPECT_EQ(rab::two_ended_envelopes(z, rab::QuotientKind::Cyclic).size(), 1u);

  auto both = rab::two_ended_envelopes(VertexGroupSpec::two_ended(1), rab::QuotientKind::Dihedral);
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[1].envelope_case, 2);
  EXPECT_EQ(both[1].fiber, 2);

  EXPECT_EQ(rab::classify_two_ended(VertexGroupSpec::two_ended(3), rab::QuotientKind::Cyclic).fiber, 3);
  EXPECT_EQ(rab::classify_two_ended(VertexGroupSpec::two_ended(3), rab::QuotientKind::Dihedral, 2).fiber, 6);
  EXPECT_THROW(rab::classify_two_ended(VertexGroupSpec::two_ended(3), rab::QuotientKind::Cyclic, 2),
               rab::DihedralRequired);
  EXPECT_THROW(rab::classify_two_ended(VertexGroupSpec::finite(3), rab::QuotientKind::Cyclic), rab::ParseError);
}

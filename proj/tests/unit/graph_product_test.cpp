#include <gtest/gtest.h>

#include "oracles/word_oracle.hpp"
#include "rabkit/errors.hpp"
#include "rabkit/graph_product.hpp"
#include "rabkit/random.hpp"
#include "rabkit/rigidity.hpp"
#include "support.hpp"

using rab::GroupElement;
using rab::Syllable;
using rab::VertexGroupSpec;

namespace {

Syllable syl(int v, std::int64_t k) { return {v, {0, k}}; }
Syllable fsyl(int v, std::int64_t k) { return {v, {k, 0}}; }

GroupElement random_element(const rab::PresentationPtr& pres, rab::Xoshiro256& rng, int len) {
  std::vector<Syllable> raw;
  for (int i = 0; i < len; ++i) {
    int v = static_cast<int>(rng.below(pres->rank()));
    const auto& spec = pres->spec(v);
    rab::VertexElement e;
    do {
      std::int64_t k = static_cast<std::int64_t>(rng.below(7)) - 3;
      e = rab::normalize(spec, spec.kind == VertexGroupSpec::Kind::FiniteCyclic
                                   ? rab::VertexElement{k, 0}
                                   : rab::VertexElement{spec.kind == VertexGroupSpec::Kind::TwoEnded ? k : 0, k});
    } while (e.is_identity());
    raw.push_back({v, e});
  }
  return rab::reduce(raw, pres);
}

oracle::Word to_oracle(const GroupElement& g) {
  oracle::Word w;
  for (const auto& s : g.word())
    w.emplace_back(s.vertex, g.presentation()->spec(s.vertex).is_finite() ? s.element.residue : s.element.z);
  return w;
}

}  // namespace

TEST(Reduce, Examples) {
  auto edge = rab::make_raag(testing_support::edge_pair());
  auto g = rab::reduce({syl(0, 1), syl(1, 1), syl(0, 1)}, edge);
  EXPECT_EQ(g.word(), (std::vector<Syllable>{syl(0, 2), syl(1, 1)}));
  EXPECT_EQ(rab::to_string(g), "0^2 1");

  EXPECT_TRUE(rab::reduce({syl(0, 1), syl(0, -1)}, edge).is_identity());

  auto w = rab::make_racg(testing_support::edgeless(2));
  auto stst = rab::reduce({fsyl(0, 1), fsyl(1, 1), fsyl(0, 1), fsyl(1, 1)}, w);
  EXPECT_EQ(stst.length(), 4);
}

TEST(Reduce, RejectsInvalidSyllables) {
  auto edge = rab::make_raag(testing_support::edge_pair());
  EXPECT_THROW(rab::reduce({syl(0, 0)}, edge), rab::InvalidSyllable);
  EXPECT_THROW(rab::reduce({syl(2, 1)}, edge), rab::InvalidSyllable);
  auto z3 = rab::make_uniform(testing_support::edge_pair(), 3);
  EXPECT_THROW(rab::reduce({fsyl(0, 3)}, z3), rab::InvalidSyllable);
}

TEST(Reduce, AgreesWithRewritingOracle) {
  rab::Xoshiro256 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    auto g = rab::random_graph(n, 0.5, rng.next());
    std::vector<VertexGroupSpec> specs;
    oracle::Cyclic group{testing_support::adjacency(g), {}};
    for (int v = 0; v < n; ++v) {
      std::int64_t q = 2 + static_cast<std::int64_t>(rng.below(2));
      specs.push_back(VertexGroupSpec::finite(q));
      group.q.push_back(q);
    }
    auto pres = rab::make_presentation(g, specs);
    int len = static_cast<int>(rng.below(7));
    std::vector<Syllable> raw;
    oracle::Word ow;
    for (int i = 0; i < len; ++i) {
      int v = static_cast<int>(rng.below(n));
      std::int64_t k = 1 + static_cast<std::int64_t>(rng.below(group.q[v] - 1));
      raw.push_back(fsyl(v, k));
      ow.emplace_back(v, k);
    }
    ASSERT_EQ(to_oracle(rab::reduce(raw, pres)), group.canonical(ow));
  }
}

TEST(Reduce, CanonicalUnderShuffles) {
  rab::Xoshiro256 rng(5);
  auto pres = rab::make_raag(rab::SimplicialGraph::cycle(5));
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Syllable> raw;
    for (int i = 0; i < 8; ++i) raw.push_back(syl(static_cast<int>(rng.below(5)), rng.below(2) ? 1 : -1));
    auto base = rab::reduce(raw, pres);
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
      if (!pres->graph().adjacent(raw[i].vertex, raw[i + 1].vertex)) continue;
      auto shuffled = raw;
      std::swap(shuffled[i], shuffled[i + 1]);
      ASSERT_EQ(rab::reduce(shuffled, pres), base);
    }
  }
}

TEST(Multiply, GroupAxioms) {
  rab::Xoshiro256 rng(3);
  std::vector<VertexGroupSpec> specs{VertexGroupSpec::finite(3), VertexGroupSpec::infinite(),
                                     VertexGroupSpec::two_ended(2), VertexGroupSpec::finite(2)};
  auto pres = rab::make_presentation(rab::SimplicialGraph::path(4), specs);
  auto id = GroupElement::identity(pres);
  for (int i = 0; i < 1000; ++i) {
    auto x = random_element(pres, rng, 6);
    auto y = random_element(pres, rng, 5);
    auto z = random_element(pres, rng, 4);
    ASSERT_TRUE((x * rab::invert(x)).is_identity());
    ASSERT_EQ(id * y, y);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_LE((x * y).length(), x.length() + y.length());
    for (int s = 0; s < 4; ++s)
      ASSERT_EQ(rab::rho(s, x * y), rab::combine(pres->spec(s), rab::rho(s, x), rab::rho(s, y)));
  }
}

TEST(Multiply, FreeProductAndMismatch) {
  auto free2 = rab::make_raag(testing_support::edgeless(2));
  auto st = GroupElement::generator(free2, 0) * GroupElement::generator(free2, 1);
  EXPECT_EQ(st.word(), (std::vector<Syllable>{syl(0, 1), syl(1, 1)}));
  auto other = rab::make_raag(testing_support::edge_pair());
  EXPECT_THROW(st * GroupElement::generator(other, 0), rab::PresentationMismatch);
  auto again = rab::make_raag(testing_support::edgeless(2));
  EXPECT_NO_THROW(st * GroupElement::generator(again, 0));
}

TEST(Rho, Examples) {
  auto free2 = rab::make_raag(testing_support::edgeless(2));
  auto g = rab::parse_word(free2, "0 1 0^-1 1^2");
  EXPECT_TRUE(rab::rho(0, g).is_identity());
  EXPECT_EQ(rab::rho(1, g).z, 3);
  EXPECT_TRUE(rab::rho(0, GroupElement::identity(free2)).is_identity());
  auto edge = rab::make_raag(testing_support::edge_pair());
  EXPECT_EQ(rab::rho(0, rab::parse_word(edge, "0^3 1")).z, 3);
}

TEST(Coxeterize, Examples) {
  auto free2 = rab::make_raag(testing_support::edgeless(2));
  EXPECT_TRUE(rab::coxeterize(GroupElement::generator(free2, 0, 2)).is_identity());
  auto w = rab::coxeterize(rab::parse_word(free2, "0^3 1"));
  EXPECT_EQ(rab::to_string(w), "0 1");
  EXPECT_TRUE(rab::coxeterize(GroupElement::identity(free2)).is_identity());
  auto odd = rab::make_uniform(testing_support::edge_pair(), 3);
  EXPECT_THROW(rab::coxeterize(GroupElement::generator(odd, 0)), rab::NoParityMap);
}

TEST(Coxeterize, HomomorphismAndIdempotent) {
  rab::Xoshiro256 rng(8);
  std::vector<VertexGroupSpec> specs{VertexGroupSpec::infinite(), VertexGroupSpec::finite(4),
                                     VertexGroupSpec::two_ended(3)};
  auto pres = rab::make_presentation(rab::SimplicialGraph::path(3), specs);
  for (int i = 0; i < 300; ++i) {
    auto a = random_element(pres, rng, 5);
    auto b = random_element(pres, rng, 5);
    auto ca = rab::coxeterize(a);
    ASSERT_EQ(rab::coxeterize(a * b), ca * rab::coxeterize(b));
    ASSERT_EQ(rab::coxeterize(ca), ca);
  }
}

TEST(SyllableLength, Examples) {
  auto raag = rab::make_raag(testing_support::edgeless(2));
  auto id = GroupElement::identity(raag);
  EXPECT_EQ(rab::syllable_length(id), 0);
  EXPECT_EQ(rab::support(id), 0U);
  auto cube3 = GroupElement::generator(raag, 0, 3);
  EXPECT_EQ(rab::syllable_length(cube3), 1);
  EXPECT_EQ(rab::support(cube3), rab::bit(0));
  auto w = rab::make_racg(testing_support::edgeless(2));
  auto stst = rab::parse_word(w, "0 1 0 1");
  EXPECT_EQ(rab::syllable_length(stst), 4);
  EXPECT_EQ(rab::support(stst), rab::bit(0) | rab::bit(1));
}

TEST(SyllableLength, MatchesCoxeterLength) {
  // Coxeter length from the rewriting closure (cancellation plus commutation
  // solves the word problem in right-angled Coxeter groups).
  rab::Xoshiro256 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = rab::random_graph(4, 0.4, rng.next());
    auto w = rab::make_racg(g);
    oracle::Cyclic group{testing_support::adjacency(g), {2, 2, 2, 2}};
    int len = static_cast<int>(rng.below(7));
    std::vector<Syllable> raw;
    oracle::Word ow;
    for (int i = 0; i < len; ++i) {
      int v = static_cast<int>(rng.below(4));
      raw.push_back(fsyl(v, 1));
      ow.emplace_back(v, 1);
    }
    ASSERT_EQ(static_cast<std::size_t>(rab::syllable_length(rab::reduce(raw, w))), group.canonical(ow).size());
  }
}

TEST(WordText, RoundTrip) {
  std::vector<VertexGroupSpec> specs{VertexGroupSpec::infinite(), VertexGroupSpec::finite(5),
                                     VertexGroupSpec::two_ended(3)};
  auto pres = rab::make_presentation(rab::SimplicialGraph(std::vector<std::string>{"s", "t", "u"}), specs);
  auto g = rab::parse_word(pres, "s^3 t^-1 u^[4,-2] s");
  EXPECT_EQ(rab::to_string(g), "s^3 t^4 u^[1,-2] s");
  EXPECT_EQ(rab::to_string(rab::parse_word(pres, rab::to_string(g))), rab::to_string(g));
  EXPECT_EQ(rab::to_string(rab::parse_word(pres, "")), "");
  EXPECT_THROW(rab::parse_word(pres, "x"), rab::ParseError);
  EXPECT_THROW(rab::parse_word(pres, "s^"), rab::ParseError);
  EXPECT_THROW(rab::parse_word(pres, "t^5"), rab::ParseError);
  EXPECT_THROW(rab::parse_word(pres, "s^[1,2]"), rab::ParseError);

  rab::Xoshiro256 rng(4);
  for (int i = 0; i < 200; ++i) {
    auto x = random_element(pres, rng, 6);
    ASSERT_EQ(rab::parse_word(pres, rab::to_string(x)), x);
  }
}

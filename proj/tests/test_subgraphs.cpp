#include <gtest/gtest.h>

#include <random>
#include <set>

#include "checks.hpp"
#include "rainbow/code.hpp"
#include "rainbow/subgraphs.hpp"

using namespace rainbow;

namespace {

using Support = std::vector<std::uint32_t>;

// components of the subgraph using colours in s, by plain BFS
std::set<Support> bfs_components(const SimplexGraph& g, ColourSet s) {
  std::vector<char> seen(g.size(), 0);
  std::set<Support> out;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (seen[v]) continue;
    Support comp{v};
    seen[v] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int c = 0; c < g.colours(); ++c)
        if (s & colour_bit(c))
          for (auto w : g.nbrs(comp[i], c))
            if (!seen[w]) seen[w] = 1, comp.push_back(w);
    std::sort(comp.begin(), comp.end());
    out.insert(comp);
  }
  return out;
}

using checks::meet;
using checks::random_case;
using checks::random_set;

}  // namespace

TEST(Subgraphs, ColourSetHelpers) {
  EXPECT_EQ(parse_colours("c0,c3"), 0b1001u);
  EXPECT_EQ(parse_colours("1,2"), 0b0110u);
  EXPECT_EQ(colour_string(0b101), "c0,c2");
  EXPECT_EQ(colour_subsets(4, 2).size(), 6u);
  EXPECT_THROW(parse_colours("x1"), std::invalid_argument);
}

TEST(Subgraphs, MaximalMatchesBfsAndPartitions) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 120; ++t) {
    auto [D, g] = random_case(rng, 1500);
    ColourSet s = random_set(rng, D + 1);
    auto subs = maximal_subgraphs(g, s);
    std::set<Support> got;
    std::size_t total = 0;
    for (auto& x : subs) {
      EXPECT_EQ(x.kind, SubgraphKind::maximal);
      got.insert(x.support);
      total += x.support.size();
    }
    EXPECT_EQ(total, g.size());
    EXPECT_EQ(got, bfs_components(g, s));
  }
}

TEST(Subgraphs, MaximalIntersectionLemma) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    auto [D, g] = random_case(rng, 800);
    ColourSet s1 = random_set(rng, D + 1), s2 = random_set(rng, D + 1);
    EXPECT_TRUE(checks::maximal_lemma(g, s1, s2)) << colour_string(s1) << " / " << colour_string(s2);
  }
}

TEST(Subgraphs, RainbowTwoSupportsAreRainbow) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    auto [D, g] = random_case(rng, 1500);
    int a = rng() % (D + 1), b = rng() % (D + 1);
    if (a == b) b = (a + 1) % (D + 1);
    auto rs = rainbow_two(g, a, b);
    for (auto& r : rs) {
      ASSERT_FALSE(r.support.empty());
      EXPECT_TRUE(is_rainbow_support(g, colour_bit(a) | colour_bit(b), r.support));
      // every colour class meets the support in an even number of flags
      for (int c : {a, b})
        for (auto v : r.support) {
          std::size_t in = 1;
          for (auto w : g.nbrs(v, c)) in += std::binary_search(r.support.begin(), r.support.end(), w);
          EXPECT_EQ(in % 2, 0u);
        }
    }
  }
}

TEST(Subgraphs, MaximalRainbowIntersectionLemma) {
  std::mt19937_64 rng(44);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 100; ++t) {
    auto [D, g] = random_case(rng, 800);
    int a = rng() % (D + 1), b = (a + 1 + rng() % D) % (D + 1);
    ColourSet s1 = random_set(rng, D + 1);
    if ((s1 & (colour_bit(a) | colour_bit(b))) == 0) continue;
    ++checked;
    EXPECT_TRUE(checks::rainbow_lemma(g, s1, a, b));
  }
  EXPECT_GE(checked, 100);
}

TEST(Subgraphs, EvenIntersectionAboveThreshold) {
  std::mt19937_64 rng(45);
  for (int t = 0; t < 100; ++t) {
    auto [D, g] = random_case(rng, 800);
    auto xs = colour_subsets(D + 1, D + rng() % 2);
    int a = rng() % (D + 1), b = (a + 1 + rng() % D) % (D + 1);
    EXPECT_TRUE(checks::even_intersections(g, xs[rng() % xs.size()], a, b));
  }
}

TEST(Subgraphs, BelowThresholdCanBeOdd) {
  // x + z = D + 1 in 2D: single colour cliques against rainbow cycles
  auto g = simplex_graph_of({make_cycle(4), make_cycle(4)});
  bool odd = false;
  for (auto& m : maximal_subgraphs(g, colour_bit(0)))
    for (auto& r : rainbow_two(g, 1, 2)) odd |= meet(m.support, r.support).size() % 2 == 1;
  EXPECT_TRUE(odd);
}

TEST(Subgraphs, RainbowRankAndCounting) {
  std::mt19937_64 rng(46);
  long checked = 0;
  for (int t = 0; t < 100; ++t) {
    auto [D, g] = random_case(rng, 1500);
    long c = checks::counting(g);
    EXPECT_GE(c, 1);
    checked += c;
  }
  EXPECT_GT(checked, 100);
}

TEST(Subgraphs, RainbowRankExamples) {
  auto g = simplex_graph_of({make_cycle(4), make_cycle(6)});
  for (auto& m : maximal_subgraphs(g, 0b011)) EXPECT_EQ(rainbow_rank(g, m), 1u);
  // fig8 x cycle4: around the centre there are 16 flags, two c0 4-cliques,
  // four c0 pairs and eight c1 pairs, so r = 16 - 14 + 1
  auto h = simplex_graph_of({make_figure_eight(), make_cycle(4)});
  std::set<std::size_t> ranks;
  for (auto& m : maximal_subgraphs(h, 0b011)) ranks.insert(rainbow_rank(h, m));
  EXPECT_EQ(ranks, (std::set<std::size_t>{1, 3}));
  Subgraph broken{SubgraphKind::maximal, 0b011, {0, 1}};
  EXPECT_THROW(rainbow_rank(g, broken), std::invalid_argument);
}

TEST(Subgraphs, RainbowMultiMatchesIntersectionRoute) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 100; ++t) {
    std::vector<LevelledGraph> f;
    for (int i = 0; i < 3; ++i) f.push_back(rng() % 3 ? make_cycle(4) : factory::small_even(rng));
    if (checks::flag_bound(f) > 1200) {
      --t;
      continue;
    }
    auto g = simplex_graph_of(f);
    auto code = assemble(g, {CodeClass::generic, 3, 2});
    auto xs = colour_subsets(4, 3);
    ColourSet s = xs[rng() % xs.size()];
    auto a = rainbow_multi(g, s, code.hz);
    auto b = rainbow_multi_by_intersection(g, s, code.hz);
    EXPECT_EQ(rref(a).basis, rref(b).basis);
    // every row commutes with hz
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < code.hz.rows(); ++j) EXPECT_EQ(dot(a.row(i), code.hz.row(j)), 0u);
  }
}

TEST(Subgraphs, SupportMatrix) {
  auto m = support_matrix(5, {{SubgraphKind::maximal, 1, {0, 3}}, {SubgraphKind::rainbow, 3, {4}}});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_TRUE(m.row(0).get(3));
  EXPECT_TRUE(m.row(1).get(4));
  EXPECT_EQ(m.row(0).weight(), 2u);
}

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "checks.hpp"
#include "rainbow/product.hpp"

using namespace rainbow;

namespace {

LevelledGraph random_bipartite(std::mt19937_64& rng, int a, int b) {
  std::vector<int> lv(a + b, 0);
  for (int i = a; i < a + b; ++i) lv[i] = 1;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = a; j < a + b; ++j)
      if (rng() % 2) e.push_back({i, j});
  return make_graph(lv, e);
}

using Flag = std::vector<std::uint32_t>;

std::vector<Flag> flags_of(const FlagList& fl) {
  std::vector<Flag> out;
  for (std::size_t f = 0; f < fl.size(); ++f) {
    Flag x;
    for (int i = 0; i <= fl.dim; ++i) x.push_back(fl.cell(f, i));
    out.push_back(x);
  }
  return out;
}

// all level-increasing paths by brute force over (D+1)-tuples of vertices
std::set<Flag> brute_flags(const GradedGraph& g) {
  std::vector<std::vector<int>> by_level(g.dim + 1);
  for (int v = 0; v < g.size(); ++v) by_level[g.level[v]].push_back(v);
  std::set<Flag> out;
  Flag cur(g.dim + 1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > g.dim) {
      out.insert(cur);
      return;
    }
    for (int v : by_level[i]) {
      if (i > 0 && !std::binary_search(g.adj[cur[i - 1]].begin(), g.adj[cur[i - 1]].end(), v)) continue;
      cur[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// edges of the simplex graph recomputed from the definition
std::set<std::tuple<std::uint32_t, std::uint32_t, int>> brute_edges(const std::vector<Flag>& f) {
  std::set<std::tuple<std::uint32_t, std::uint32_t, int>> e;
  for (std::uint32_t a = 0; a < f.size(); ++a)
    for (std::uint32_t b = a + 1; b < f.size(); ++b) {
      int diff = -1, cnt = 0;
      for (std::size_t i = 0; i < f[a].size(); ++i)
        if (f[a][i] != f[b][i]) diff = static_cast<int>(i), ++cnt;
      if (cnt == 1) e.insert({a, b, diff});
    }
  return e;
}

std::set<std::tuple<std::uint32_t, std::uint32_t, int>> edge_set(const SimplexGraph& g) {
  std::set<std::tuple<std::uint32_t, std::uint32_t, int>> e;
  for (auto& x : g.edges()) e.insert({x.u, x.v, x.colour});
  return e;
}

}  // namespace

TEST(Product, LevelsAndSizes) {
  auto p = cartesian_product({make_cycle(4), make_cycle(6)});
  EXPECT_EQ(p.size(), 24);
  EXPECT_EQ(p.dim, 2);
  auto census = p.level_census();
  EXPECT_EQ(census[0], 6);
  EXPECT_EQ(census[1], 12);
  EXPECT_EQ(census[2], 6);
  for (int v = 0; v < p.size(); ++v) EXPECT_EQ(p.level[v], make_cycle(4).level[p.tuple[v][0]] + make_cycle(6).level[p.tuple[v][1]]);
}

TEST(Product, FlagCountFormula) {
  EXPECT_EQ(simplex_graph_of({make_cycle(4), make_cycle(4)}).size(), 32u);
  EXPECT_EQ(predicted_flag_count({make_cycle(4), make_cycle(4)}), 32u);
  EXPECT_EQ(predicted_flag_count({make_cycle(6), make_cycle(6), make_cycle(6)}), 1296u);
  EXPECT_EQ(predicted_flag_count({make_complete_bipartite(4, 4), make_complete_bipartite(4, 4), make_complete_bipartite(4, 4)}), 24576u);
  EXPECT_THROW(predicted_flag_count({make_figure_eight()}), std::invalid_argument);
  EXPECT_EQ(simplex_graph_of({make_figure_eight(), make_figure_eight(), make_figure_eight()}).size(), 3072u);
}

TEST(Product, FlagsAndEdgesMatchDefinition) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    int D = 1 + rng() % 3;
    std::vector<LevelledGraph> f;
    for (int i = 0; i < D; ++i) f.push_back(random_bipartite(rng, 1 + rng() % 3, 1 + rng() % 3));
    auto p = cartesian_product(f);
    auto fl = enumerate_flags(p);
    auto got = flags_of(fl);
    EXPECT_EQ(std::set<Flag>(got.begin(), got.end()), brute_flags(p));
    EXPECT_EQ(got.size(), brute_flags(p).size());  // no duplicates
    auto g = build_simplex_graph(fl);
    EXPECT_EQ(edge_set(g), brute_edges(got));
  }
}

TEST(Product, CycleProductsAreColourCodeLattices) {
  for (auto f : {std::vector<LevelledGraph>{make_cycle(4), make_cycle(6)},
                 std::vector<LevelledGraph>{make_cycle(4), make_cycle(4), make_cycle(4)}}) {
    auto g = simplex_graph_of(f);
    for (std::size_t v = 0; v < g.size(); ++v)
      for (int c = 0; c < g.colours(); ++c) EXPECT_EQ(g.nbrs(v, c).size(), 1u);
  }
}

TEST(Product, FigureEightCliques) {
  auto g = simplex_graph_of({make_figure_eight(), make_figure_eight(), make_figure_eight()});
  std::map<std::size_t, std::size_t> c0, c3, c1;
  for (std::size_t v = 0; v < g.size(); ++v) {
    ++c0[g.nbrs(v, 0).size() + 1];
    ++c1[g.nbrs(v, 1).size() + 1];
    ++c3[g.nbrs(v, 3).size() + 1];
  }
  EXPECT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1.begin()->first, 2u);
  EXPECT_TRUE(c0.count(4));  // level-1 centre of degree 4
  EXPECT_EQ(c3.size(), 1u);  // level-0 factor vertices all have degree 2
}

// Gluing two same-level vertices of a factor and then taking the product
// gives the same simplex graph as gluing the matching hyperplanes of the
// product.
TEST(Product, HyperplaneGluingCommutes) {
  std::mt19937_64 rng(32);
  int done = 0;
  for (int t = 0; t < 5000 && done < 120; ++t) {
    auto r = checks::glue_commutes(rng);
    if (!r) continue;
    EXPECT_TRUE(*r) << "draw " << t;
    ++done;
  }
  EXPECT_GE(done, 100);
}

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "factories.hpp"
#include "rainbow/contraction.hpp"
#include "rainbow/distance.hpp"

using namespace rainbow;

namespace {

using EdgeSet = std::set<std::tuple<std::uint32_t, std::uint32_t, int>>;

// union-find over the removed colours, ids ordered by lowest member
struct Oracle {
  std::vector<std::uint32_t> id;
  std::size_t count = 0;
  EdgeSet edges;
};

Oracle contract_by_hand(const SimplexGraph& g, ColourSet removed) {
  std::vector<std::uint32_t> p(g.size());
  std::iota(p.begin(), p.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  for (auto& e : g.edges())
    if (removed & colour_bit(e.colour)) {
      auto a = find(e.u), b = find(e.v);
      if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
  Oracle o;
  o.id.assign(g.size(), 0);
  std::map<std::uint32_t, std::uint32_t> root_id;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    auto r = find(v);
    if (!root_id.count(r)) root_id[r] = static_cast<std::uint32_t>(root_id.size());
    o.id[v] = root_id[r];
  }
  o.count = root_id.size();
  for (auto& e : g.edges())
    if (!(removed & colour_bit(e.colour)) && o.id[e.u] != o.id[e.v])
      o.edges.insert({std::min(o.id[e.u], o.id[e.v]), std::max(o.id[e.u], o.id[e.v]), e.colour});
  return o;
}

EdgeSet edge_set(const ContractedGraph& c) {
  EdgeSet s;
  for (auto& e : c.edges) s.insert({e.u, e.v, e.colour});
  return s;
}

SimplexGraph random_graph(std::mt19937_64& rng) {
  for (;;) {
    int D = 2 + rng() % 2;
    std::vector<LevelledGraph> f;
    for (int i = 0; i < D; ++i) f.push_back(D == 3 && rng() % 2 ? make_cycle(4) : factory::small_even(rng));
    std::size_t bound = 1;
    for (std::size_t i = 0; i < f.size(); ++i) bound *= f[i].edges.size() * (i + 1);
    if (bound <= 1500) return simplex_graph_of(f);
  }
}

Family fam(char side, ColourSet s) { return {side, SubgraphKind::maximal, s}; }

}  // namespace

TEST(Contraction, MatchesUnionFindAndCountsCliques) {
  std::mt19937_64 rng(81);
  for (int t = 0; t < 120; ++t) {
    auto g = random_graph(rng);
    int c = rng() % g.colours();
    auto cg = contract(g, c);
    auto o = contract_by_hand(g, colour_bit(c));
    EXPECT_EQ(cg.vertices, o.count);
    EXPECT_EQ(cg.vertices, maximal_subgraphs(g, colour_bit(c)).size());
    EXPECT_EQ(cg.vertex_map, o.id);
    EXPECT_EQ(edge_set(cg), o.edges);
  }
}

TEST(Contraction, OrderDoesNotMatter) {
  std::mt19937_64 rng(82);
  for (int t = 0; t < 100; ++t) {
    auto g = random_graph(rng);
    int a = rng() % g.colours(), b = (a + 1 + rng() % (g.colours() - 1)) % g.colours();
    auto ab = contract(contract(g, a), b);
    auto ba = contract(contract(g, b), a);
    EXPECT_EQ(ab.vertex_map, ba.vertex_map);
    EXPECT_EQ(ab.edges, ba.edges);
    EXPECT_EQ(ab.removed, ba.removed);
    auto both = contract(g, std::vector<int>{a, b});
    EXPECT_EQ(both.vertex_map, ab.vertex_map);
    auto o = contract_by_hand(g, colour_bit(a) | colour_bit(b));
    EXPECT_EQ(edge_set(ab), o.edges);
  }
}

TEST(Contraction, Errors) {
  auto g = simplex_graph_of({make_cycle(4), make_cycle(4)});
  EXPECT_THROW(contract(g, 3), ValidationError);
  EXPECT_THROW(contract(contract(g, 0), 0), ValidationError);
  EXPECT_THROW(default_contracted_families(3, colour_bit(1)), ValidationError);
  auto cg = contract(g, 0);
  EXPECT_THROW(contracted_code(cg, {{'X', SubgraphKind::rainbow, 0b111}}), ValidationError);
  EXPECT_EQ(uncontracted(g).vertices, 32u);
}

TEST(Contraction, ClassesAndImages) {
  auto g = simplex_graph_of({make_cycle(4), make_cycle(4)});
  auto cg = contract(g, 0);
  auto cls = cg.classes();
  ASSERT_EQ(cls.size(), 16u);
  for (std::size_t i = 0; i < cls.size(); ++i) {
    EXPECT_EQ(cls[i].size(), 2u);
    for (auto v : cls[i]) EXPECT_EQ(cg.vertex_map[v], i);
    if (i) EXPECT_LT(cls[i - 1][0], cls[i][0]);
  }
  EXPECT_EQ(image(cg, {cls[3][0], cls[3][1], cls[5][0]}), (std::vector<std::uint32_t>{3, 5}));
}

TEST(Contraction, SquareLatticeGolden) {
  auto g = simplex_graph_of({make_cycle(4), make_cycle(4)});
  auto cg = contract(g, 0);
  auto fams = default_contracted_families(2, colour_bit(0));
  EXPECT_EQ(fams.size(), 4u);  // {c0,c1} and {c1,c2} on both sides
  auto c = contracted_code(cg, fams);
  EXPECT_EQ(c.n, 16u);
  EXPECT_EQ(c.k, 4u);
  EXPECT_EQ(exact_distance_upto(c, Side::both, 4).certified(), std::optional<std::size_t>(4));
}

TEST(Contraction, SquareHexagonLosesTwo) {
  auto g = simplex_graph_of({make_cycle(4), make_cycle(6)});
  auto c = contracted_code(contract(g, 0), default_contracted_families(2, colour_bit(0)));
  EXPECT_EQ(c.n, 24u);
  EXPECT_EQ(c.k, 2u);
  EXPECT_EQ(exact_distance_upto(c, Side::both, 4).certified(), std::optional<std::size_t>(4));
}

TEST(Contraction, ThreeSquares) {
  auto g = simplex_graph_of({make_cycle(4), make_cycle(4), make_cycle(4)});
  auto one = contracted_code(contract(g, 0), default_contracted_families(3, colour_bit(0)));
  EXPECT_EQ(one.n, 192u);
  EXPECT_EQ(one.k, 9u);
  std::vector<Family> fams{fam('X', 0b0111), fam('X', 0b1110), fam('Z', 0b0011), fam('Z', 0b1100), fam('Z', 0b0110)};
  auto two = contracted_code(contract(g, std::vector<int>{0, 3}), fams);
  EXPECT_EQ(two.n, 96u);
  EXPECT_EQ(two.k, 9u);
}

TEST(Contraction, CommutationCheckMatchesImages) {
  auto g = simplex_graph_of({make_cycle(4), make_cycle(6)});
  auto cg = contract(g, 0);
  int rejected = 0, accepted = 0;
  for (ColourSet sx = 1; sx < 8; ++sx)
    for (ColourSet sz = 1; sz < 8; ++sz) {
      bool odd = false;
      for (auto& x : maximal_subgraphs(g, sx))
        for (auto& z : maximal_subgraphs(g, sz)) {
          auto a = image(cg, x.support), b = image(cg, z.support);
          std::vector<std::uint32_t> m;
          std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m));
          odd |= m.size() % 2 == 1;
        }
      if (odd) {
        EXPECT_THROW(contracted_code(cg, {fam('X', sx), fam('Z', sz)}), ValidationError);
        ++rejected;
      } else {
        EXPECT_NO_THROW(contracted_code(cg, {fam('X', sx), fam('Z', sz)}));
        ++accepted;
      }
    }
  EXPECT_GT(rejected, 0);
  EXPECT_GT(accepted, 0);
}

TEST(Contraction, Contractibility) {
  auto g = simplex_graph_of({make_cycle(4), make_cycle(4), make_cycle(4)});
  EXPECT_TRUE(contractibility_check(g, 0).pass);
  EXPECT_TRUE(contractibility_check(g, 3).pass);
  for (int c : {1, 2}) {
    auto r = contractibility_check(g, c);
    EXPECT_FALSE(r.pass);
    ASSERT_FALSE(r.violations.empty());
    EXPECT_EQ(r.violations[0].size % 4, 2u);
  }
}

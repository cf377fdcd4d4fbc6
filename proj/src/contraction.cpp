#include "rainbow/contraction.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

std::vector<std::vector<std::uint32_t>> ContractedGraph::classes() const {
  std::vector<std::vector<std::uint32_t>> out(vertices);
  for (std::size_t f = 0; f < vertex_map.size(); ++f) out[vertex_map[f]].push_back(static_cast<std::uint32_t>(f));
  return out;
}

ContractedGraph uncontracted(const SimplexGraph& g) {
  ContractedGraph cg;
  cg.base = g;
  cg.vertices = g.size();
  cg.vertex_map.resize(g.size());
  std::iota(cg.vertex_map.begin(), cg.vertex_map.end(), 0u);
  cg.edges = g.edges();
  return cg;
}

namespace {

std::uint32_t find(std::vector<std::uint32_t>& p, std::uint32_t x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

}  // namespace

ContractedGraph contract(const ContractedGraph& g, int colour) {
  if (colour < 0 || colour >= g.base.colours())
    throw ValidationError("colour c" + std::to_string(colour) + " is not in the graph");
  if (g.removed & colour_bit(colour))
    throw ValidationError("colour c" + std::to_string(colour) + " was already contracted");
  std::vector<std::uint32_t> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0u);
  for (auto& e : g.edges)
    if (e.colour == colour) {
      auto a = find(parent, e.u), b = find(parent, e.v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);  // roots stay at the lowest id
    }
  // old ids already follow lowest base flag, so numbering roots in id order keeps that
  std::vector<std::uint32_t> newid(g.vertices, 0);
  std::size_t cnt = 0;
  for (std::uint32_t v = 0; v < g.vertices; ++v)
    if (find(parent, v) == v) newid[v] = static_cast<std::uint32_t>(cnt++);
  ContractedGraph out;
  out.base = g.base;
  out.removed = g.removed | colour_bit(colour);
  out.vertices = cnt;
  out.vertex_map.resize(g.vertex_map.size());
  for (std::size_t f = 0; f < g.vertex_map.size(); ++f) out.vertex_map[f] = newid[find(parent, g.vertex_map[f])];
  for (auto& e : g.edges) {
    if (e.colour == colour) continue;
    auto a = newid[find(parent, e.u)], b = newid[find(parent, e.v)];
    if (a == b) continue;
    out.edges.push_back({std::min(a, b), std::max(a, b), e.colour});
  }
  std::sort(out.edges.begin(), out.edges.end(), [](auto& x, auto& y) {
    return std::tie(x.u, x.v, x.colour) < std::tie(y.u, y.v, y.colour);
  });
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end(),
                              [](auto& x, auto& y) { return x.u == y.u && x.v == y.v && x.colour == y.colour; }),
                  out.edges.end());
  return out;
}

ContractedGraph contract(const SimplexGraph& g, int colour) { return contract(uncontracted(g), colour); }

ContractedGraph contract(const SimplexGraph& g, const std::vector<int>& colours) {
  ContractedGraph cg = uncontracted(g);
  for (int c : colours) cg = contract(cg, c);
  return cg;
}

ContractibilityReport contractibility_check(const SimplexGraph& g, int colour) {
  ContractibilityReport rep;
  for (int d = 0; d < g.colours(); ++d) {
    if (d == colour) continue;
    ColourSet pair = colour_bit(colour) | colour_bit(d);
    for (auto& sg : rainbow_two(g, std::min(colour, d), std::max(colour, d)))
      if (sg.support.size() % 4) {
        rep.pass = false;
        rep.violations.push_back({pair, sg.support.size()});
      }
  }
  return rep;
}

std::vector<std::uint32_t> image(const ContractedGraph& cg, const std::vector<std::uint32_t>& support) {
  std::vector<std::uint32_t> out;
  out.reserve(support.size());
  for (auto f : support) out.push_back(cg.vertex_map.at(f));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CssCode contracted_code(const ContractedGraph& cg, const std::vector<Family>& families) {
  const SimplexGraph& g = cg.base;
  BitMatrix hx(cg.vertices), hz(cg.vertices);
  std::vector<RowOrigin> ox, oz;
  for (auto& f : families) {
    if (f.colours >> g.colours()) throw ValidationError("family colour outside the graph");
    std::vector<Subgraph> subs;
    if (f.kind == SubgraphKind::maximal) {
      subs = maximal_subgraphs(g, f.colours);
    } else if (colour_count(f.colours) == 2) {
      auto cl = colour_list(f.colours);
      subs = rainbow_two(g, cl[0], cl[1]);
    } else {
      throw ValidationError("contracted rainbow families with more than two colours are not supported");
    }
    auto& m = f.side == 'X' ? hx : hz;
    auto& o = f.side == 'X' ? ox : oz;
    for (auto& sg : subs) {
      auto im = image(cg, sg.support);
      m.append(support_vector(cg.vertices, im));
      o.push_back({f.kind, f.colours});
    }
  }
  CssCode c = make_css(std::move(hx), std::move(hz));
  c.x_origin = std::move(ox);
  c.z_origin = std::move(oz);
  return c;
}

std::vector<Family> default_contracted_families(int D, ColourSet removed) {
  const ColourSet ends = colour_bit(0) | colour_bit(D);
  if (removed & ~ends) throw ValidationError("no default families when an inner colour is contracted");
  auto keep = [&](ColourSet s) {
    if ((removed & s & colour_bit(0)) && !(s & colour_bit(1))) return false;
    if ((removed & s & colour_bit(D)) && !(s & colour_bit(D - 1))) return false;
    return true;
  };
  std::vector<Family> out;
  for (auto s : colour_subsets(D + 1, D))
    if (keep(s)) out.push_back({'X', SubgraphKind::maximal, s});
  for (auto s : colour_subsets(D + 1, 2))
    if (keep(s)) out.push_back({'Z', SubgraphKind::maximal, s});
  return out;
}

}  // namespace rainbow

#include "rainbow/subgraphs.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace rainbow {

ColourSet all_colours(int ncolours) { return (ColourSet(1) << ncolours) - 1; }

std::vector<int> colour_list(ColourSet s) {
  std::vector<int> out;
  for (int c = 0; s; ++c, s >>= 1)
    if (s & 1) out.push_back(c);
  return out;
}

int colour_count(ColourSet s) { return std::popcount(s); }

std::string colour_string(ColourSet s) {
  std::string out;
  for (int c : colour_list(s)) {
    if (!out.empty()) out += ",";
    out += "c" + std::to_string(c);
  }
  return out;
}

ColourSet parse_colours(const std::string& s) {
  ColourSet out = 0;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ',')) {
    if (t.empty()) continue;
    if (t[0] == 'c' || t[0] == 'C') t = t.substr(1);
    std::size_t used = 0;
    int c = std::stoi(t, &used);
    if (used != t.size() || c < 0 || c > 30) throw std::invalid_argument("bad colour '" + t + "'");
    out |= colour_bit(c);
  }
  return out;
}

std::vector<ColourSet> colour_subsets(int ncolours, int m) {
  std::vector<ColourSet> out;
  for (ColourSet s = 0; s < (ColourSet(1) << ncolours); ++s)
    if (colour_count(s) == m) out.push_back(s);
  return out;
}

std::string kind_name(SubgraphKind k) { return k == SubgraphKind::maximal ? "maximal" : "rainbow"; }

BitVec support_vector(std::size_t n, const std::vector<std::uint32_t>& support) {
  BitVec v(n);
  for (auto q : support) v.set(q);
  return v;
}

BitMatrix support_matrix(std::size_t n, const std::vector<Subgraph>& subs) {
  BitMatrix m(n);
  for (auto& s : subs) m.append(support_vector(n, s.support));
  return m;
}

namespace {

std::uint64_t edge_key(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (std::uint64_t(a) << 32) | b;
}

// Lowest member of each colour-c class, and whether that class is a clique.
struct ColourClasses {
  std::vector<std::uint32_t> cmin;
  std::vector<char> clique;  // indexed by flag (value of its class)
};

ColourClasses colour_classes(const SimplexGraph& g, int c) {
  const std::size_t n = g.size();
  ColourClasses cc;
  cc.cmin.assign(n, UINT32_MAX);
  cc.clique.assign(n, 1);
  std::vector<std::uint32_t> comp;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (cc.cmin[s] != UINT32_MAX) continue;
    comp.clear();
    comp.push_back(s);
    cc.cmin[s] = s;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (auto w : g.nbrs(comp[i], c))
        if (cc.cmin[w] == UINT32_MAX) cc.cmin[w] = s, comp.push_back(w);
    bool ok = true;
    for (auto v : comp)
      if (g.nbrs(v, c).size() + 1 != comp.size()) ok = false;
    for (auto v : comp) cc.clique[v] = ok;
  }
  return cc;
}

}  // namespace

SpanningForest spanning_tree(const SimplexGraph& g, int colour, const std::vector<std::vector<std::uint32_t>>& F,
                             bool star_edges) {
  const std::size_t n = g.size();
  SpanningForest sf;
  sf.part.assign(n, -1);
  for (std::size_t i = 0; i < F.size(); ++i)
    for (auto v : F[i]) sf.part[v] = static_cast<int>(i);
  for (auto p : sf.part)
    if (p < 0) throw std::invalid_argument("spanning_tree: subgraphs must cover every flag");

  ColourClasses cls;
  if (star_edges) cls = colour_classes(g, colour);
  auto usable = [&](std::uint32_t a, std::uint32_t b) {
    if (!star_edges || !cls.clique[a]) return true;
    return a == cls.cmin[a] || b == cls.cmin[a];
  };

  sf.tree.assign(F.size(), {-1, 0, 0});
  sf.depth.assign(F.size(), -1);
  std::unordered_set<std::uint64_t> tree_edges;
  for (std::size_t r = 0; r < F.size(); ++r) {
    if (sf.depth[r] >= 0) continue;
    std::vector<int> comp{static_cast<int>(r)};
    sf.depth[r] = 0;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      int f = comp[h];
      for (auto v1 : F[f])
        for (auto v2 : g.nbrs(v1, colour)) {
          int f2 = sf.part[v2];
          if (f2 == f || sf.depth[f2] >= 0 || !usable(v1, v2)) continue;
          sf.tree[f2] = {f, v1, v2};
          sf.depth[f2] = sf.depth[f] + 1;
          tree_edges.insert(edge_key(v1, v2));
          comp.push_back(f2);
        }
    }
    std::sort(comp.begin(), comp.end());
    sf.comps.push_back(std::move(comp));
  }
  for (auto& e : g.edges()) {
    if (e.colour != colour) continue;
    int f1 = sf.part[e.u], f2 = sf.part[e.v];
    if (f1 == f2 || !usable(e.u, e.v) || tree_edges.count(edge_key(e.u, e.v))) continue;
    sf.cycles.push_back({f1, f2, e.u, e.v});
  }
  return sf;
}

std::vector<Subgraph> maximal_subgraphs(const SimplexGraph& g, ColourSet colours) {
  const std::size_t n = g.size();
  if (colours >> g.colours()) throw std::invalid_argument("colour outside the simplex graph");
  // recursion on the colour list: singletons, then join along one colour at a time
  std::vector<std::vector<std::uint32_t>> F(n);
  for (std::uint32_t v = 0; v < n; ++v) F[v] = {v};
  auto cl = colour_list(colours);
  for (auto it = cl.rbegin(); it != cl.rend(); ++it) {
    auto sf = spanning_tree(g, *it, F);
    std::vector<std::vector<std::uint32_t>> next;
    for (auto& comp : sf.comps) {
      std::vector<std::uint32_t> vs;
      for (int f : comp) vs.insert(vs.end(), F[f].begin(), F[f].end());
      std::sort(vs.begin(), vs.end());
      next.push_back(std::move(vs));
    }
    F = std::move(next);
  }
  std::sort(F.begin(), F.end());
  std::vector<Subgraph> out;
  for (auto& s : F) out.push_back({SubgraphKind::maximal, colours, std::move(s)});
  return out;
}

std::vector<Subgraph> rainbow_two(const SimplexGraph& g, int a, int b) {
  if (a == b) throw std::invalid_argument("rainbow_two needs two distinct colours");
  if (a < 0 || b < 0 || a >= g.colours() || b >= g.colours()) throw std::invalid_argument("colour out of range");
  std::vector<std::vector<std::uint32_t>> F;
  for (auto& s : maximal_subgraphs(g, colour_bit(b))) F.push_back(s.support);
  auto sf = spanning_tree(g, a, F, true);

  std::vector<Subgraph> out;
  std::unordered_set<std::string> seen;
  std::vector<std::uint32_t> acc;
  for (auto& cy : sf.cycles) {
    acc.clear();
    acc.push_back(cy.u);
    acc.push_back(cy.v);
    int x = cy.f1, y = cy.f2;
    while (x != y) {
      if (sf.depth[x] >= sf.depth[y]) {
        auto& l = sf.tree[x];
        acc.push_back(l.u), acc.push_back(l.v);
        x = l.parent;
      } else {
        auto& l = sf.tree[y];
        acc.push_back(l.u), acc.push_back(l.v);
        y = l.parent;
      }
    }
    // mod-2 sum of the visited flags
    std::sort(acc.begin(), acc.end());
    std::vector<std::uint32_t> sup;
    for (std::size_t i = 0; i < acc.size();) {
      std::size_t j = i;
      while (j < acc.size() && acc[j] == acc[i]) ++j;
      if ((j - i) % 2) sup.push_back(acc[i]);
      i = j;
    }
    if (sup.empty()) continue;
    std::string key(reinterpret_cast<const char*>(sup.data()), sup.size() * sizeof(std::uint32_t));
    if (!seen.insert(key).second) continue;
    out.push_back({SubgraphKind::rainbow, colour_bit(a) | colour_bit(b), std::move(sup)});
  }
  return out;
}

std::vector<Subgraph> rainbow_multi_subgraphs(const SimplexGraph& g, ColourSet colours, const BitMatrix& hz) {
  const std::size_t n = g.size();
  if (hz.cols() != n) throw std::invalid_argument("rainbow_multi: check matrix width differs from flag count");
  std::vector<std::vector<std::uint32_t>> rows_at(n);
  for (std::size_t i = 0; i < hz.rows(); ++i)
    for (auto q : hz.row(i).support()) rows_at[q].push_back(static_cast<std::uint32_t>(i));

  std::vector<Subgraph> out;
  std::vector<int> local(n, -1);
  for (auto& f : maximal_subgraphs(g, colours)) {
    const auto& cols = f.support;
    for (std::size_t j = 0; j < cols.size(); ++j) local[cols[j]] = static_cast<int>(j);
    std::vector<std::uint32_t> touching;
    for (auto q : cols) touching.insert(touching.end(), rows_at[q].begin(), rows_at[q].end());
    std::sort(touching.begin(), touching.end());
    touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
    BitMatrix r(cols.size());
    for (auto i : touching) {
      BitVec v(cols.size());
      for (auto q : hz.row(i).support())
        if (local[q] >= 0) v.set(local[q]);
      r.append(v);
    }
    BitMatrix k = kernel(r);
    for (auto& kv : k.row_list()) {
      std::vector<std::uint32_t> sup;
      for (auto j : kv.support()) sup.push_back(cols[j]);
      out.push_back({SubgraphKind::rainbow, colours, std::move(sup)});
    }
    for (auto q : cols) local[q] = -1;
  }
  // disjoint supports: ordering by leading flag gives the global echelon form
  std::sort(out.begin(), out.end(), [](const Subgraph& x, const Subgraph& y) { return x.support[0] < y.support[0]; });
  return out;
}

BitMatrix rainbow_multi(const SimplexGraph& g, ColourSet colours, const BitMatrix& hz) {
  return support_matrix(g.size(), rainbow_multi_subgraphs(g, colours, hz));
}

BitMatrix rainbow_multi_by_intersection(const SimplexGraph& g, ColourSet colours, const BitMatrix& hz) {
  const std::size_t n = g.size();
  if (hz.cols() != n) throw std::invalid_argument("rainbow_multi: check matrix width differs from flag count");
  BitMatrix K = kernel(hz);
  BitMatrix all(n);
  for (auto& f : maximal_subgraphs(g, colours)) {
    BitMatrix coord(n);
    for (auto q : f.support) {
      BitVec e(n);
      e.set(q);
      coord.append(e);
    }
    all.append(span_intersection(K, coord));
  }
  return rref(all).basis;
}

bool is_rainbow_support(const SimplexGraph& g, ColourSet colours, const std::vector<std::uint32_t>& support) {
  std::vector<char> in(g.size(), 0);
  for (auto q : support) in[q] = 1;
  for (int c : colour_list(colours)) {
    auto cls = colour_classes(g, c);
    std::vector<std::uint32_t> cnt(g.size(), 0);
    for (auto q : support) ++cnt[cls.cmin[q]];
    for (auto q : support) {
      // a clique meeting the support evenly can be perfectly matched inside it
      if (cnt[cls.cmin[q]] % 2) return false;
      if (!cls.clique[q]) {
        bool partner = false;
        for (auto w : g.nbrs(q, c)) partner |= in[w] != 0;
        if (!partner) return false;
      }
    }
  }
  return true;
}

std::map<std::size_t, std::size_t> clique_census(const SimplexGraph& g, int colour) {
  std::map<std::size_t, std::size_t> out;
  for (auto& s : maximal_subgraphs(g, colour_bit(colour))) {
    for (auto v : s.support)
      if (g.nbrs(v, colour).size() + 1 != s.support.size())
        throw std::invalid_argument("colour c" + std::to_string(colour) + " class containing flag " +
                                    std::to_string(s.support[0]) + " is not a clique");
    ++out[s.support.size()];
  }
  return out;
}

std::map<std::size_t, std::size_t> clique_sizes(const SimplexGraph& g, const Subgraph& m) {
  auto cl = colour_list(m.colours);
  if (cl.size() != 2) throw std::invalid_argument("expected a two-colour subgraph");
  std::map<std::size_t, std::size_t> out;
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (auto q : m.support) in[q] = 1;
  for (int c : cl) {
    std::fill(seen.begin(), seen.end(), 0);
    for (auto s : m.support) {
      if (seen[s]) continue;
      std::vector<std::uint32_t> comp{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (auto w : g.nbrs(comp[i], c)) {
          if (!in[w]) throw std::invalid_argument("support is not closed under its colours");
          if (!seen[w]) seen[w] = 1, comp.push_back(w);
        }
      for (auto v : comp)
        if (g.nbrs(v, c).size() + 1 != comp.size()) throw std::invalid_argument("colour class is not a clique");
      ++out[comp.size()];
    }
  }
  return out;
}

std::size_t rainbow_rank(const SimplexGraph& g, const Subgraph& m) {
  auto cl = colour_list(m.colours);
  if (cl.size() != 2 || m.support.empty()) throw std::invalid_argument("rainbow_rank needs a two-colour subgraph");
  // connectedness under the two colours
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (auto q : m.support) in[q] = 1;
  std::vector<std::uint32_t> st{m.support[0]};
  seen[m.support[0]] = 1;
  std::size_t reached = 1;
  while (!st.empty()) {
    auto u = st.back();
    st.pop_back();
    for (int c : cl)
      for (auto w : g.nbrs(u, c))
        if (in[w] && !seen[w]) seen[w] = 1, ++reached, st.push_back(w);
  }
  if (reached != m.support.size()) throw std::invalid_argument("rainbow_rank: subgraph is disconnected");
  std::size_t cliques = 0;
  for (auto [size, count] : clique_sizes(g, m)) cliques += count;
  // clique graph: one node per clique, one edge per flag
  return m.support.size() - cliques + 1;
}

}  // namespace rainbow

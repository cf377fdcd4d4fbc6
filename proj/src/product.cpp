#include "rainbow/product.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rainbow {

std::map<int, int> ProductGraph::level_census() const {
  std::map<int, int> c;
  for (int l : level) ++c[l];
  return c;
}

ProductGraph cartesian_product(const std::vector<LevelledGraph>& factors) {
  if (factors.empty()) throw std::invalid_argument("product needs at least one factor");
  for (auto& f : factors) validate(f);
  ProductGraph p;
  p.factors = factors;
  p.dim = static_cast<int>(factors.size());
  const int D = p.dim;
  std::vector<std::vector<std::vector<int>>> fadj;
  for (auto& f : factors) fadj.push_back(f.adjacency());

  std::size_t total = 1;
  for (auto& f : factors) total *= f.size();
  // mixed radix, first factor most significant, so id order is tuple order
  std::vector<std::size_t> stride(D, 1);
  for (int i = D - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].size();

  p.tuple.resize(total);
  p.level.resize(total);
  p.adj.resize(total);
  for (std::size_t v = 0; v < total; ++v) {
    std::vector<int> t(D);
    std::size_t r = v;
    int lv = 0;
    for (int i = 0; i < D; ++i) {
      t[i] = static_cast<int>(r / stride[i]);
      r %= stride[i];
      lv += factors[i].level[t[i]];
    }
    p.level[v] = lv;
    for (int i = 0; i < D; ++i)
      for (int w : fadj[i][t[i]]) {
        std::size_t u = v + (static_cast<long>(w) - t[i]) * stride[i];
        p.adj[v].push_back(static_cast<int>(u));
      }
    std::sort(p.adj[v].begin(), p.adj[v].end());
    p.tuple[v] = std::move(t);
  }
  return p;
}

GradedGraph glue_vertices(const GradedGraph& g, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> rep(g.size());
  std::iota(rep.begin(), rep.end(), 0);
  for (auto [k, r] : pairs) {
    if (g.level[k] != g.level[r]) throw std::invalid_argument("glue_vertices: level mismatch");
    rep[r] = k;
  }
  for (int v = 0; v < g.size(); ++v)
    while (rep[rep[v]] != rep[v]) rep[v] = rep[rep[v]];
  std::vector<int> id(g.size(), -1);
  GradedGraph out;
  out.dim = g.dim;
  for (int v = 0; v < g.size(); ++v)
    if (rep[v] == v) {
      id[v] = out.size();
      out.level.push_back(g.level[v]);
    }
  std::vector<std::set<int>> adj(out.size());
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.adj[v]) {
      int a = id[rep[v]], b = id[rep[w]];
      if (a == b) throw std::invalid_argument("glue_vertices: glued vertices are adjacent");
      adj[a].insert(b);
    }
  for (auto& s : adj) out.adj.emplace_back(s.begin(), s.end());
  return out;
}

FlagList enumerate_flags(const GradedGraph& g) {
  FlagList fl;
  fl.dim = g.dim;
  const int D = g.dim;
  std::vector<std::uint32_t> path(D + 1);
  // iterative DFS over level-increasing paths, ascending neighbour order
  auto rec = [&](auto&& self, int v, int depth) -> void {
    path[depth] = static_cast<std::uint32_t>(v);
    if (depth == D) {
      fl.cells.insert(fl.cells.end(), path.begin(), path.end());
      return;
    }
    for (int w : g.adj[v])
      if (g.level[w] == depth + 1) self(self, w, depth + 1);
  };
  for (int v = 0; v < g.size(); ++v)
    if (g.level[v] == 0) rec(rec, v, 0);
  return fl;
}

std::uint64_t predicted_flag_count(const std::vector<LevelledGraph>& factors) {
  if (factors.empty()) throw std::invalid_argument("no factors");
  int d = -1;
  std::uint64_t n0 = 1;
  for (auto& f : factors) {
    int fd;
    if (!is_regular(f, &fd) || (d >= 0 && fd != d))
      throw std::invalid_argument("flag-count formula needs every factor d-regular");
    d = fd;
    n0 *= std::count(f.level.begin(), f.level.end(), 0);
  }
  std::uint64_t D = factors.size(), fact = 1, pw = 1;
  for (std::uint64_t i = 2; i <= D; ++i) fact *= i;
  for (std::uint64_t i = 0; i < D; ++i) pw *= d;
  return n0 * fact * pw;
}

SimplexGraph::SimplexGraph(std::size_t n, int colours, std::vector<ColouredEdge> edges, FlagList flags)
    : n_(n), ncol_(colours), flags_(std::move(flags)) {
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) throw std::invalid_argument("simplex graph: bad edge");
    if (e.colour < 0 || e.colour >= colours) throw std::invalid_argument("simplex graph: bad colour");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const ColouredEdge& a, const ColouredEdge& b) {
    return std::tie(a.u, a.v, a.colour) < std::tie(b.u, b.v, b.colour);
  });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n_ * ncol_, {});
  for (auto& e : edges_) {
    adj_[e.u * ncol_ + e.colour].push_back(e.v);
    adj_[e.v * ncol_ + e.colour].push_back(e.u);
  }
  for (auto& l : adj_) std::sort(l.begin(), l.end());
}

SimplexGraph build_simplex_graph(const FlagList& flags) {
  const int D = flags.dim;
  const std::size_t n = flags.size();
  std::vector<ColouredEdge> edges;
  std::vector<std::uint32_t> order(n);
  for (int i = 0; i <= D; ++i) {
    std::iota(order.begin(), order.end(), 0u);
    auto less = [&](std::uint32_t a, std::uint32_t b) {
      for (int j = 0; j <= D; ++j) {
        if (j == i) continue;
        auto x = flags.cell(a, j), y = flags.cell(b, j);
        if (x != y) return x < y;
      }
      return a < b;
    };
    auto same = [&](std::uint32_t a, std::uint32_t b) {
      for (int j = 0; j <= D; ++j)
        if (j != i && flags.cell(a, j) != flags.cell(b, j)) return false;
      return true;
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t s = 0; s < n;) {
      std::size_t t = s + 1;
      while (t < n && same(order[s], order[t])) ++t;
      for (std::size_t a = s; a < t; ++a)
        for (std::size_t b = a + 1; b < t; ++b) edges.push_back({order[a], order[b], i});
      s = t;
    }
  }
  return SimplexGraph(n, D + 1, std::move(edges), flags);
}

SimplexGraph simplex_graph_of(const std::vector<LevelledGraph>& factors) {
  return build_simplex_graph(cartesian_product(factors));
}

}  // namespace rainbow

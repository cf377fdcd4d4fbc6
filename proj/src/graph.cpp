#include "rainbow/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rainbow {

std::vector<std::vector<int>> LevelledGraph::adjacency() const {
  std::vector<std::vector<int>> adj(level.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return adj;
}

std::vector<int> LevelledGraph::degrees() const {
  std::vector<int> d(level.size(), 0);
  for (auto [a, b] : edges) ++d[a], ++d[b];
  return d;
}

std::vector<int> LevelledGraph::neighbours(int v) const { return adjacency().at(v); }

void validate(const LevelledGraph& g) {
  std::set<std::pair<int, int>> seen;
  for (int l : g.level)
    if (l != 0 && l != 1) throw std::invalid_argument("vertex level must be 0 or 1");
  for (auto [a, b] : g.edges) {
    if (a < 0 || b < 0 || a >= g.size() || b >= g.size())
      throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    if (g.level[a] == g.level[b])
      throw std::invalid_argument("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " joins vertices of equal level");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw std::invalid_argument("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
  }
}

LevelledGraph make_graph(std::vector<int> levels, std::vector<std::pair<int, int>> edges) {
  LevelledGraph g;
  g.level = std::move(levels);
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  g.edges = std::move(edges);
  validate(g);
  return g;
}

LevelledGraph make_cycle(int len) {
  if (len < 4 || len % 2) throw std::invalid_argument("cycle length must be even and at least 4");
  std::vector<int> lv(len);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < len; ++i) {
    lv[i] = i % 2;
    e.push_back({i, (i + 1) % len});
  }
  return make_graph(lv, e);
}

// two 4-cycles sharing the level-1 vertex 5
LevelledGraph make_figure_eight() {
  return make_graph({0, 0, 0, 0, 1, 1, 1},
                    {{4, 0}, {0, 5}, {5, 1}, {1, 4}, {5, 2}, {2, 6}, {6, 3}, {3, 5}});
}

LevelledGraph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite sides must be >= 1");
  std::vector<int> lv(a + b, 0);
  for (int j = 0; j < b; ++j) lv[a + j] = 1;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return make_graph(lv, e);
}

LevelledGraph make_path(int nvert) {
  if (nvert < 1) throw std::invalid_argument("path needs a vertex");
  std::vector<int> lv(nvert);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < nvert; ++i) lv[i] = i % 2;
  for (int i = 0; i + 1 < nvert; ++i) e.push_back({i, i + 1});
  return make_graph(lv, e);
}

LevelledGraph disjoint_union(const LevelledGraph& a, const LevelledGraph& b) {
  auto lv = a.level;
  lv.insert(lv.end(), b.level.begin(), b.level.end());
  auto e = a.edges;
  for (auto [x, y] : b.edges) e.push_back({x + a.size(), y + a.size()});
  return make_graph(lv, e);
}

int connected_components(const LevelledGraph& g) {
  auto adj = g.adjacency();
  std::vector<char> seen(g.size(), 0);
  int cc = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    ++cc;
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int u = st.back();
      st.pop_back();
      for (int w : adj[u])
        if (!seen[w]) seen[w] = 1, st.push_back(w);
    }
  }
  return cc;
}

int circuit_rank(const LevelledGraph& g) {
  return static_cast<int>(g.edges.size()) - g.size() + connected_components(g);
}

std::optional<int> girth(const LevelledGraph& g) {
  auto adj = g.adjacency();
  int best = -1;
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> dist(g.size(), -1), par(g.size(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          par[w] = u;
          q.push(w);
        } else if (par[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

bool is_all_even_degree(const LevelledGraph& g) {
  for (int d : g.degrees())
    if (d % 2) return false;
  return true;
}

bool is_regular(const LevelledGraph& g, int* degree) {
  auto d = g.degrees();
  if (d.empty()) return false;
  for (int x : d)
    if (x != d[0]) return false;
  if (degree) *degree = d[0];
  return true;
}

std::vector<std::vector<int>> cycle_decomposition(const LevelledGraph& g) {
  auto deg = g.degrees();
  for (int v = 0; v < g.size(); ++v)
    if (deg[v] % 2)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has odd degree " +
                                  std::to_string(deg[v]));
  // incident (neighbour, edge id) lists in neighbour order
  std::vector<std::vector<std::pair<int, int>>> inc(g.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [a, b] = g.edges[e];
    inc[a].push_back({b, e});
    inc[b].push_back({a, e});
  }
  for (auto& l : inc) std::sort(l.begin(), l.end());
  std::vector<char> used(g.edges.size(), 0);
  std::vector<std::size_t> cursor(g.size(), 0);
  auto next_edge = [&](int v) -> std::pair<int, int> {
    auto& c = cursor[v];
    while (c < inc[v].size() && used[inc[v][c].second]) ++c;
    if (c == inc[v].size()) return {-1, -1};
    return inc[v][c];
  };
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    while (next_edge(s).first >= 0) {
      std::vector<int> walk{s};
      int cur = s;
      while (true) {
        auto [w, e] = next_edge(cur);
        if (w < 0) break;  // even degrees: only possible back at s
        used[e] = 1;
        cur = w;
        walk.push_back(w);
      }
      walk.pop_back();  // closing vertex == s
      out.push_back(std::move(walk));
    }
  }
  return out;
}

GlueResult glue(const LevelledGraph& g, int keep, int remove) {
  if (keep < 0 || remove < 0 || keep >= g.size() || remove >= g.size() || keep == remove)
    throw std::invalid_argument("glue: bad vertex ids");
  if (g.level[keep] != g.level[remove]) throw std::invalid_argument("glue: vertex levels differ");
  auto adj = g.adjacency();
  if (std::binary_search(adj[remove].begin(), adj[remove].end(), keep))
    throw std::invalid_argument("glue: vertices are adjacent");
  auto relabel = [&](int v) { return v == remove ? keep : v; };
  auto shift = [&](int v) { return v > remove ? v - 1 : v; };
  std::set<std::pair<int, int>> es;
  bool merged = false;
  for (auto [a, b] : g.edges) {
    int x = shift(relabel(a)), y = shift(relabel(b));
    if (x > y) std::swap(x, y);
    if (!es.insert({x, y}).second) merged = true;
  }
  std::vector<int> lv;
  for (int v = 0; v < g.size(); ++v)
    if (v != remove) lv.push_back(g.level[v]);
  GlueResult r;
  r.graph = make_graph(lv, {es.begin(), es.end()});
  r.record.kept = keep;
  r.record.removed = remove;
  r.record.level = g.level[keep];
  for (int u : adj[remove]) r.record.moved.push_back(shift(u));
  r.merged_parallel = merged;
  return r;
}

LevelledGraph unglue(const LevelledGraph& g, int v, const std::vector<int>& moved_to) {
  if (v < 0 || v >= g.size()) throw std::invalid_argument("unglue: bad vertex id");
  auto adj = g.adjacency();
  std::set<int> mv(moved_to.begin(), moved_to.end());
  for (int u : mv)
    if (!std::binary_search(adj[v].begin(), adj[v].end(), u))
      throw std::invalid_argument("unglue: edge " + std::to_string(v) + "-" + std::to_string(u) +
                                  " is not incident to the vertex");
  int nv = g.size();
  auto lv = g.level;
  lv.push_back(g.level[v]);
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges) {
    if (a == v && mv.count(b))
      e.push_back({b, nv});
    else if (b == v && mv.count(a))
      e.push_back({a, nv});
    else
      e.push_back({a, b});
  }
  return make_graph(lv, e);
}

LevelledGraph graph_from_shorthand(const std::string& s) {
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : s.substr(colon + 1);
  auto ints = [&]() {
    std::vector<int> v;
    std::stringstream ss(arg);
    std::string t;
    while (std::getline(ss, t, ',')) v.push_back(std::stoi(t));
    return v;
  };
  try {
    if (head == "fig8" && arg.empty()) return make_figure_eight();
    if (head == "cycle") {
      auto v = ints();
      if (v.size() == 1) return make_cycle(v[0]);
    }
    if (head == "kbip") {
      auto v = ints();
      if (v.size() == 2) return make_complete_bipartite(v[0], v[1]);
    }
    if (head == "path") {
      auto v = ints();
      if (v.size() == 1) return make_path(v[0]);
    }
  } catch (const std::logic_error& e) {
    throw std::invalid_argument("bad graph shorthand '" + s + "': " + e.what());
  }
  throw std::invalid_argument("unknown graph shorthand '" + s + "'");
}

}  // namespace rainbow

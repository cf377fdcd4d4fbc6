#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rainbow/graph.hpp"

namespace factory {

// XOR of a few random alternating cycles, isolated vertices dropped.
// Every vertex has even degree; result may be disconnected.
inline rainbow::LevelledGraph random_even(std::mt19937_64& rng, int a, int b, int cycles) {
  std::set<std::pair<int, int>> e;
  for (int t = 0; t < cycles; ++t) {
    int len = 2 + rng() % std::max(1, std::min(a, b) - 1);
    if (len > std::min(a, b)) len = std::min(a, b);
    std::vector<int> xs(a), ys(b);
    for (int i = 0; i < a; ++i) xs[i] = i;
    for (int j = 0; j < b; ++j) ys[j] = a + j;
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);
    for (int i = 0; i < len; ++i) {
      for (auto p : {std::pair{xs[i], ys[i]}, std::pair{xs[(i + 1) % len], ys[i]}}) {
        if (e.count(p)) e.erase(p);
        else e.insert(p);
      }
    }
  }
  std::map<int, int> id;
  for (auto [u, v] : e) id[u], id[v];
  std::vector<int> lv;
  for (auto& [old, nw] : id) nw = static_cast<int>(lv.size()), lv.push_back(old < a ? 0 : 1);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : e) edges.push_back({id[u], id[v]});
  if (edges.empty()) return rainbow::make_cycle(4);
  return rainbow::make_graph(lv, edges);
}

inline rainbow::LevelledGraph small_even(std::mt19937_64& rng) {
  switch (rng() % 6) {
    case 0: return rainbow::make_cycle(4);
    case 1: return rainbow::make_cycle(6);
    case 2: return rainbow::make_figure_eight();
    case 3: return rainbow::make_complete_bipartite(2, 2 + 2 * (rng() % 2));
    default: return random_even(rng, 2 + rng() % 3, 2 + rng() % 3, 1 + rng() % 3);
  }
}

}  // namespace factory

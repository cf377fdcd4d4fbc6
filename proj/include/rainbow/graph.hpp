#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

// Simple bipartite graph whose two sides are levels 0 and 1.
// Vertex ids are dense 0..size()-1.
struct LevelledGraph {
  std::vector<int> level;
  std::vector<std::pair<int, int>> edges;  // stored with first < second, sorted

  int size() const { return static_cast<int>(level.size()); }
  std::vector<std::vector<int>> adjacency() const;  // sorted neighbour lists
  std::vector<int> degrees() const;
  std::vector<int> neighbours(int v) const;
  bool operator==(const LevelledGraph&) const = default;
};

// Throws std::invalid_argument when the graph is not simple or an edge
// joins two vertices of the same level.
void validate(const LevelledGraph& g);
LevelledGraph make_graph(std::vector<int> levels, std::vector<std::pair<int, int>> edges);

LevelledGraph make_cycle(int len);
LevelledGraph make_figure_eight();
LevelledGraph make_complete_bipartite(int a, int b);
LevelledGraph make_path(int nvert);  // levels alternate from 0
LevelledGraph disjoint_union(const LevelledGraph& a, const LevelledGraph& b);

int circuit_rank(const LevelledGraph& g);
int connected_components(const LevelledGraph& g);
std::optional<int> girth(const LevelledGraph& g);  // nullopt for forests
bool is_all_even_degree(const LevelledGraph& g);
bool is_regular(const LevelledGraph& g, int* degree = nullptr);

// Closed trails partitioning the edges. Each cycle lists its vertices in
// walk order; the closing edge runs from the last vertex back to the first.
std::vector<std::vector<int>> cycle_decomposition(const LevelledGraph& g);

struct GluingRecord {
  int kept;
  int removed;
  int level;
  std::vector<int> moved;  // former neighbours of `removed`, ids after gluing
};

struct GlueResult {
  LevelledGraph graph;
  GluingRecord record;
  bool merged_parallel = false;
};

// `remove` is deleted and ids above it shift down by one.
GlueResult glue(const LevelledGraph& g, int keep, int remove);
// Adds a new vertex (id = size()) with the level of v and moves the listed
// edges {v, u} for u in moved_to onto it.
LevelledGraph unglue(const LevelledGraph& g, int v, const std::vector<int>& moved_to);

// Generator shorthands: "cycle:4", "fig8", "kbip:4,4", "path:3".
LevelledGraph graph_from_shorthand(const std::string& s);

}  // namespace rainbow

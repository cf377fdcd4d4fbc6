#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Graph with integer vertex levels 0..D; flags are level-increasing paths.
struct GradedGraph {
  int dim = 0;  // D
  std::vector<int> level;
  std::vector<std::vector<int>> adj;  // sorted
  int size() const { return static_cast<int>(level.size()); }
};

struct ProductGraph : GradedGraph {
  std::vector<LevelledGraph> factors;
  std::vector<std::vector<int>> tuple;  // factor vertex ids per product vertex
  std::map<int, int> level_census() const;
};

ProductGraph cartesian_product(const std::vector<LevelledGraph>& factors);

// Glue product vertices (keep_i, remove_i); removed ids are dropped and the
// rest renumbered in increasing order. Levels must match.
GradedGraph glue_vertices(const GradedGraph& g, const std::vector<std::pair<int, int>>& pairs);

// Flag cells stored flat: flag f occupies cells[f*(D+1) .. f*(D+1)+D].
struct FlagList {
  int dim = 0;
  std::vector<std::uint32_t> cells;
  std::size_t size() const { return dim < 0 ? 0 : cells.size() / (dim + 1); }
  std::uint32_t cell(std::size_t f, int i) const { return cells[f * (dim + 1) + i]; }
};

FlagList enumerate_flags(const GradedGraph& g);
// n0 * D! * d^D for d-regular factors; throws for irregular input
std::uint64_t predicted_flag_count(const std::vector<LevelledGraph>& factors);

struct ColouredEdge {
  std::uint32_t u, v;
  int colour;
  bool operator==(const ColouredEdge&) const = default;
  auto operator<=>(const ColouredEdge&) const = default;
};

class SimplexGraph {
 public:
  SimplexGraph() = default;
  // edges are normalised (u < v), deduplicated and sorted
  SimplexGraph(std::size_t n, int colours, std::vector<ColouredEdge> edges, FlagList flags = {});

  std::size_t size() const { return n_; }
  int colours() const { return ncol_; }  // D+1
  int dim() const { return ncol_ - 1; }
  const std::vector<ColouredEdge>& edges() const { return edges_; }
  const std::vector<std::uint32_t>& nbrs(std::size_t v, int c) const { return adj_[v * ncol_ + c]; }
  const FlagList& flags() const { return flags_; }
  bool has_flags() const { return flags_.size() == n_ && n_ > 0; }

 private:
  std::size_t n_ = 0;
  int ncol_ = 0;
  std::vector<ColouredEdge> edges_;
  std::vector<std::vector<std::uint32_t>> adj_;
  FlagList flags_;
};

// Two flags are joined by colour i when their cells differ exactly at i.
SimplexGraph build_simplex_graph(const FlagList& flags);
inline SimplexGraph build_simplex_graph(const GradedGraph& g) { return build_simplex_graph(enumerate_flags(g)); }

SimplexGraph simplex_graph_of(const std::vector<LevelledGraph>& factors);

}  // namespace rainbow

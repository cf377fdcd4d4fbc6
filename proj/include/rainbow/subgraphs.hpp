#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rainbow/gf2.hpp"
#include "rainbow/product.hpp"

namespace rainbow {

using ColourSet = std::uint32_t;  // bit i set = colour c_i

inline ColourSet colour_bit(int c) { return ColourSet(1) << c; }
ColourSet all_colours(int ncolours);
std::vector<int> colour_list(ColourSet s);
int colour_count(ColourSet s);
std::string colour_string(ColourSet s);  // "c0,c2"
ColourSet parse_colours(const std::string& s);  // "c0,c3" or "0,3"
// all subsets of {0..ncolours-1} with exactly m colours, increasing bitmask
std::vector<ColourSet> colour_subsets(int ncolours, int m);

enum class SubgraphKind { maximal, rainbow };
std::string kind_name(SubgraphKind k);

struct Subgraph {
  SubgraphKind kind;
  ColourSet colours;
  std::vector<std::uint32_t> support;  // sorted flag indices
  bool operator==(const Subgraph&) const = default;
};

BitVec support_vector(std::size_t n, const std::vector<std::uint32_t>& support);
BitMatrix support_matrix(std::size_t n, const std::vector<Subgraph>& subs);

// Spanning structure over a partition F of the flags joined by colour-c edges.
struct SpanningForest {
  std::vector<int> part;                // flag -> index into F
  std::vector<std::vector<int>> comps;  // connected components as lists of F indices
  struct Link { int parent; std::uint32_t u, v; };  // u in parent, v in child
  std::vector<Link> tree;                            // parent = -1 at roots
  std::vector<int> depth;
  struct Cycle { int f1, f2; std::uint32_t u, v; };
  std::vector<Cycle> cycles;            // joining edges left out of the tree
};

SpanningForest spanning_tree(const SimplexGraph& g, int colour, const std::vector<std::vector<std::uint32_t>>& F,
                             bool star_edges = false);

std::vector<Subgraph> maximal_subgraphs(const SimplexGraph& g, ColourSet colours);

// Generating set of {a,b}-rainbow supports, one per out-of-tree edge.
std::vector<Subgraph> rainbow_two(const SimplexGraph& g, int a, int b);

// Kernel of hz restricted to each S-maximal subgraph; rows are returned as
// subgraphs (one per basis vector) and the union is in reduced echelon form.
std::vector<Subgraph> rainbow_multi_subgraphs(const SimplexGraph& g, ColourSet colours, const BitMatrix& hz);
BitMatrix rainbow_multi(const SimplexGraph& g, ColourSet colours, const BitMatrix& hz);
// Same span computed literally through span_intersection against kernel(hz).
BitMatrix rainbow_multi_by_intersection(const SimplexGraph& g, ColourSet colours, const BitMatrix& hz);

// Every vertex of the support can be given exactly one edge of each colour
// in S inside the support (colour classes are cliques, so: even meets).
bool is_rainbow_support(const SimplexGraph& g, ColourSet colours, const std::vector<std::uint32_t>& support);

std::map<std::size_t, std::size_t> clique_census(const SimplexGraph& g, int colour);

// Rainbow rank of a single two-colour maximal subgraph via its clique graph.
std::size_t rainbow_rank(const SimplexGraph& g, const Subgraph& two_maximal);
// Clique sizes (both colours) inside a two-colour maximal subgraph.
std::map<std::size_t, std::size_t> clique_sizes(const SimplexGraph& g, const Subgraph& two_maximal);

}  // namespace rainbow

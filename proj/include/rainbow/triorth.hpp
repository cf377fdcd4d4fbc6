#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include "rainbow/code.hpp"

namespace rainbow {

// a[q] = 1 means T on qubit q, 0 means T-dagger.
using Bipartition = BitVec;

// Proper 2-colouring of the flag graph, lowest flag of each component = T.
// Throws ValidationError when the graph has an odd cycle.
Bipartition find_bipartition(const SimplexGraph& g);

// Orientation of each flag of the product of `factors` (same flag order as
// simplex_graph_of): sign of the order in which factors step up, times a
// sign per factor edge read off a closed-trail decomposition of its factor.
// Adjacent flags inside any one cycle-product block get opposite values.
// Throws ValidationError if a factor has odd-degree vertices.
Bipartition orientation_bipartition(const std::vector<LevelledGraph>& factors);

struct ConditionStatus {
  bool pass = true;
  std::string counterexample;  // first failure, empty when passing
};

struct TriorthReport {
  std::array<ConditionStatus, 5> cond;
  bool gate_found = false;
};

TriorthReport check_triorthogonality(CssCode& code, const Bipartition& a);

// Unordered triples (i<j<k) of X-logical rows with odd triple overlap.
// Throws ValidationError when the transversal gate is not available.
std::vector<std::tuple<int, int, int>> ccz_interactions(CssCode& code, const Bipartition& a);
// Skips the re-check when a report for the same code is at hand.
std::vector<std::tuple<int, int, int>> ccz_interactions(CssCode& code, const TriorthReport& r);

// Replaces the logical bases with lz rows chosen colour by colour: for each
// colour c in order, low-weight nontrivial Z logicals supported on unions of
// {c}-maximal subgraphs are added greedily by weight; lx becomes the dual
// basis. Returns the colour of each logical (-1 if none fit).
std::vector<int> colour_logical_basis(CssCode& code, const SimplexGraph& g, const std::vector<int>& colour_order,
                                      std::size_t iterations = 64, std::uint64_t seed = 1);

}  // namespace rainbow

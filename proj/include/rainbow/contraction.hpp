#pragma once

#include <utility>
#include <vector>

#include "rainbow/code.hpp"

namespace rainbow {

struct ContractedGraph {
  SimplexGraph base;
  ColourSet removed = 0;
  std::vector<std::uint32_t> vertex_map;  // base flag -> contracted vertex
  std::size_t vertices = 0;
  std::vector<ColouredEdge> edges;  // u < v, sorted, no removed colours

  // contracted vertices ordered by their lowest base flag
  std::vector<std::vector<std::uint32_t>> classes() const;
};

ContractedGraph uncontracted(const SimplexGraph& g);
// Throws ValidationError if the colour is out of range or already removed.
ContractedGraph contract(const ContractedGraph& g, int colour);
ContractedGraph contract(const SimplexGraph& g, int colour);
ContractedGraph contract(const SimplexGraph& g, const std::vector<int>& colours);

struct ContractibilityReport {
  bool pass = true;
  struct Violation {
    ColourSet pair;
    std::size_t size;
  };
  std::vector<Violation> violations;
};

// Every generating {colour,d}-rainbow support must have size 0 mod 4.
ContractibilityReport contractibility_check(const SimplexGraph& g, int colour);

// Image of a base subgraph: contracted vertices it touches.
std::vector<std::uint32_t> image(const ContractedGraph& cg, const std::vector<std::uint32_t>& support);

// Families name base-graph colour sets (removed colours allowed). Rows are the
// images of the family's subgraphs. Non-commuting choices throw ValidationError.
CssCode contracted_code(const ContractedGraph& cg, const std::vector<Family>& families);

// Colour-code families (X on D-sets, Z on 2-sets, maximal) minus those that
// hold a contracted end colour without its neighbour: c0 needs c1, cD needs
// c(D-1). Only c0 and cD may be contracted.
std::vector<Family> default_contracted_families(int D, ColourSet removed);

}  // namespace rainbow

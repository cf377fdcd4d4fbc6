#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/gf2.hpp"
#include "rainbow/product.hpp"
#include "rainbow/subgraphs.hpp"

namespace rainbow {

enum class CodeClass { pin, generic, anti_generic, mixed };
std::string class_name(CodeClass c);
CodeClass parse_class(const std::string& s);

struct Assignment {
  CodeClass cls = CodeClass::pin;
  int x = 2;
  int z = 2;
};

// Raised when a requested code is not well defined (bad assignment,
// non-commuting families). Carries a human-readable reason.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_assignment(const Assignment& a, int D);

// One stabiliser family: all S-maximal or S-rainbow subgraphs for S in sets.
struct Family {
  char side;  // 'X' or 'Z'
  SubgraphKind kind;
  ColourSet colours;
};

std::vector<Family> families_for(const Assignment& a, int D);

struct RowOrigin {
  SubgraphKind kind;
  ColourSet colours;
};

struct CssCode {
  std::size_t n = 0;
  BitMatrix hx, hz;
  std::vector<RowOrigin> x_origin, z_origin;
  std::optional<Assignment> assignment;
  std::size_t rank_x = 0, rank_z = 0, k = 0;
  bool has_logicals = false;
  BitMatrix lx, lz;
};

// Builds hx and hz for the class, checks commutation, computes ranks and k.
CssCode assemble(const SimplexGraph& g, const Assignment& a);
// Same from an explicit family list (Z families are built before X ones so
// that rainbow families with more than two colours see the opposite checks).
CssCode assemble_families(const SimplexGraph& g, const std::vector<Family>& fams);
CssCode make_css(BitMatrix hx, BitMatrix hz);

// Throws ValidationError naming the first non-commuting row pair.
void check_commutation(const BitMatrix& hx, const BitMatrix& hz);

void compute_logicals(CssCode& code);
std::pair<BitMatrix, BitMatrix> logical_basis(CssCode& code);

// Greedy weight reduction of a logical representative by stabiliser rows.
BitVec reduce_weight(const BitVec& v, const BitMatrix& stabilisers);

// Logicals supported on unions of maximal subgraphs of the complementary
// colour set, modulo stabilisers. side = 'X' or 'Z'.
BitMatrix coloured_logicals(CssCode& code, const SimplexGraph& g, ColourSet colours, char side);

// Closed-form k for the non-pin classes.
std::size_t predicted_k(const Assignment& a, const std::vector<int>& circuit_ranks, int D);

}  // namespace rainbow

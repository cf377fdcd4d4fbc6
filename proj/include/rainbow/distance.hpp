#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rainbow/code.hpp"

namespace rainbow {

enum class Side { X, Z, both };
std::string side_name(Side s);
Side parse_side(const std::string& s);

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Witness {
  char side;  // which Pauli type the logical is made of
  std::size_t weight;
  BitVec support;
};

struct DistanceReport {
  Side side = Side::both;
  // no logical of weight <= exact_floor exists (from exhaustive search)
  std::optional<std::size_t> exact_floor;
  std::optional<Witness> best;
  std::string method;
  std::size_t wmax = 0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;

  // distance when the floor and the witness meet
  std::optional<std::size_t> certified() const;
};

constexpr std::uint64_t kDefaultBudget = 1000000000ULL;

// Number of supports of weight 1..wmax on n qubits, saturating.
std::uint64_t candidate_count(std::size_t n, std::size_t wmax);

DistanceReport exact_distance_upto(CssCode& code, Side side, std::size_t wmax,
                                   std::uint64_t budget = kDefaultBudget);
DistanceReport isd_upper_bound(CssCode& code, Side side, std::size_t iterations, std::uint64_t seed);

// true when v is a nontrivial logical of type `side` ('X' or 'Z')
bool is_nontrivial_logical(CssCode& code, char side, const BitVec& v);

// X and Z reports of one code: floor is the smaller floor (absent if either
// side has none), witness the lighter one.
DistanceReport combine_sides(const DistanceReport& x, const DistanceReport& z);
// Same side: exhaustive floor from `exact`, lighter witness of the two.
DistanceReport with_witness(const DistanceReport& exact, const DistanceReport& search);

}  // namespace rainbow

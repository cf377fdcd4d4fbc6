#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow/gf2.hpp"

using namespace rainbow;
using oracle::Mask;

namespace {

BitMatrix random_matrix(std::mt19937_64& rng, int r, int c, int density = 2) {
  BitMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rng() % density == 0) m.set(i, j);
  return m;
}

}  // namespace

TEST(BitVec, BasicOps) {
  auto v = BitVec::from_string("0110010");
  EXPECT_EQ(v.weight(), 3u);
  EXPECT_EQ(v.first(), 1u);
  EXPECT_EQ(v.next(3), 5u);
  EXPECT_EQ(v.next(6), 7u);
  EXPECT_EQ(v.str(), "0110010");
  EXPECT_EQ(v.support(), (std::vector<std::size_t>{1, 2, 5}));
  auto w = BitVec::from_support(7, {2, 3});
  EXPECT_EQ((v ^ w).str(), "0101010");
  EXPECT_EQ((v & w).str(), "0010000");
  EXPECT_EQ(overlap(v, w), 1u);
  EXPECT_EQ(dot(v, w), 1u);
  EXPECT_THROW(BitVec::from_support(3, {3}), std::out_of_range);
  EXPECT_THROW(v ^= BitVec(8), std::invalid_argument);
}

TEST(BitVec, WordBoundaries) {
  BitVec v(130);
  v.set(63);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.support(), (std::vector<std::size_t>{63, 64, 129}));
  EXPECT_EQ(v.next(65), 129u);
  EXPECT_EQ(v.next(130), 130u);
  v.flip(64);
  EXPECT_EQ(v.weight(), 2u);
}

TEST(BitMatrix, TransposeMatmul) {
  auto a = BitMatrix::from_strings({"110", "011"});
  auto t = transpose(a);
  EXPECT_EQ(t.strings(), (std::vector<std::string>{"10", "11", "01"}));
  auto p = matmul(a, t);
  EXPECT_EQ(p.strings(), (std::vector<std::string>{"01", "10"}));
  EXPECT_THROW(matmul(a, a), std::invalid_argument);
}

TEST(Gf2, RankKernelAgainstEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int r = 1 + rng() % 8, c = 1 + rng() % 12;
    BitMatrix m = random_matrix(rng, r, c, 1 + rng() % 3);
    auto rows = oracle::masks(m);
    EXPECT_EQ(rank(m), static_cast<std::size_t>(oracle::rank(rows)));
    auto ker = kernel(m);
    auto kv = oracle::kernel_vectors(rows, c);
    EXPECT_EQ(std::size_t(1) << ker.rows(), kv.size());
    auto ks = oracle::span(oracle::masks(ker));
    EXPECT_EQ(ks, std::set<Mask>(kv.begin(), kv.end()));
  }
}

TEST(Gf2, RrefIsReducedAndSpansSame) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    int r = 1 + rng() % 9, c = 1 + rng() % 14;
    BitMatrix m = random_matrix(rng, r, c);
    Echelon e = rref(m);
    EXPECT_EQ(oracle::span(oracle::masks(e.basis)), oracle::span(oracle::masks(m)));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      EXPECT_EQ(e.basis.row(i).first(), e.pivots[i]);
      for (std::size_t j = 0; j < e.pivots.size(); ++j)
        if (j != i) EXPECT_FALSE(e.basis.get(j, e.pivots[i]));
      if (i) EXPECT_LT(e.pivots[i - 1], e.pivots[i]);
    }
  }
}

TEST(Gf2, SpanIntersectionAgainstSets) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    int c = 2 + rng() % 9;
    BitMatrix a = random_matrix(rng, 1 + rng() % 5, c), b = random_matrix(rng, 1 + rng() % 5, c);
    auto sa = oracle::span(oracle::masks(a)), sb = oracle::span(oracle::masks(b));
    std::set<Mask> both;
    for (Mask x : sa)
      if (sb.count(x)) both.insert(x);
    EXPECT_EQ(oracle::span(oracle::masks(span_intersection(a, b))), both);
  }
}

TEST(Gf2, MembershipTestersAgree) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    int c = 2 + rng() % 12;
    BitMatrix m = random_matrix(rng, 1 + rng() % 6, c);
    auto s = oracle::span(oracle::masks(m));
    SpanTester st(m);
    RowSpace rs(c);
    for (auto& r : m.row_list()) rs.add(r);
    EXPECT_EQ(rs.rank(), rank(m));
    for (int k = 0; k < 20; ++k) {
      Mask v = static_cast<Mask>(rng()) & ((Mask(1) << c) - 1);
      BitVec bv = oracle::matrix({v}, c).row(0);
      bool expect = s.count(v) > 0;
      EXPECT_EQ(st.contains(bv), expect);
      EXPECT_EQ(rs.contains(bv), expect);
      EXPECT_EQ(in_span(bv, m), expect);
    }
  }
}

TEST(Gf2, InvertRoundTrip) {
  std::mt19937_64 rng(15);
  int done = 0;
  while (done < 100) {
    int k = 1 + rng() % 10;
    BitMatrix m = random_matrix(rng, k, k);
    if (rank(m) < static_cast<std::size_t>(k)) {
      EXPECT_THROW(invert(m), std::domain_error);
      continue;
    }
    EXPECT_EQ(matmul(m, invert(m)), BitMatrix::identity(k));
    ++done;
  }
}

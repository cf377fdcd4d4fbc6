#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rainbow {

// Packed bit vector over GF(2). Padding bits past size() are kept zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitVec from_support(std::size_t n, const std::vector<std::size_t>& idx);
  static BitVec from_string(const std::string& bits);  // "0110"

  std::size_t size() const { return n_; }
  std::size_t nwords() const { return w_.size(); }
  std::uint64_t* data() { return w_.data(); }
  const std::uint64_t* data() const { return w_.data(); }

  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    else
      w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  std::size_t weight() const;
  bool any() const;
  // index of lowest set bit, or size() when zero
  std::size_t first() const;
  std::size_t next(std::size_t from) const;  // lowest set bit >= from
  std::vector<std::size_t> support() const;
  std::string str() const;

  BitVec& operator^=(const BitVec& o);
  BitVec& operator&=(const BitVec& o);
  BitVec& operator|=(const BitVec& o);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }
  // ordering by support read from column 0 upward; used only for determinism
  bool operator<(const BitVec& o) const;

  // xor o into this starting at word `from_word`
  void xor_from(const BitVec& o, std::size_t from_word);

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

std::size_t dot(const BitVec& a, const BitVec& b);    // parity of overlap
std::size_t overlap(const BitVec& a, const BitVec& b);  // |a & b|

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows, BitVec(cols)) {}
  explicit BitMatrix(std::size_t cols) : cols_(cols) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_strings(const std::vector<std::string>& rows);
  static BitMatrix from_rows(std::size_t cols, std::vector<BitVec> rows);

  std::size_t rows() const { return r_.size(); }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { r_[i].set(j, v); }
  BitVec& row(std::size_t i) { return r_[i]; }
  const BitVec& row(std::size_t i) const { return r_[i]; }
  const std::vector<BitVec>& row_list() const { return r_; }
  void append(const BitVec& v);
  void append(const BitMatrix& m);
  bool operator==(const BitMatrix& o) const { return cols_ == o.cols_ && r_ == o.r_; }
  std::vector<std::string> strings() const;
  std::size_t max_row_weight() const;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> r_;
};

BitMatrix transpose(const BitMatrix& m);
BitMatrix vstack(const BitMatrix& a, const BitMatrix& b);
BitMatrix matmul(const BitMatrix& a, const BitMatrix& b);
BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& cols);

struct Echelon {
  BitMatrix basis;                  // reduced row echelon, rank rows
  std::vector<std::size_t> pivots;  // leading column of each basis row
};

std::size_t rank(const BitMatrix& m);
Echelon rref(const BitMatrix& m);
BitMatrix kernel(const BitMatrix& m);
BitMatrix span_intersection(const BitMatrix& a, const BitMatrix& b);
bool in_span(const BitVec& v, const BitMatrix& m);
// inverse of a square matrix; throws std::domain_error when singular
BitMatrix invert(const BitMatrix& m);

// Incremental row space. Each stored row has a distinct leading (lowest) bit
// and no other stored row leads below it on the same column.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols), slot_(cols, -1) {}
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  // returns true when v was independent (and is now part of the space)
  bool add(const BitVec& v);
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return !reduce(v).any(); }
  const std::vector<BitVec>& rows() const { return rows_; }

 private:
  std::size_t cols_;
  std::vector<long> slot_;  // column -> stored row with that leading bit
  std::vector<BitVec> rows_;
};

// Fast membership in rowspan(m): v is in the row space iff it is orthogonal
// to every kernel vector of m. Columns of the kernel are cached.
class SpanTester {
 public:
  SpanTester() = default;
  explicit SpanTester(const BitMatrix& m);
  bool contains(const BitVec& v) const;
  bool contains_support(const std::vector<std::size_t>& idx) const;
  std::size_t codim() const { return kdim_; }

 private:
  std::size_t n_ = 0, kdim_ = 0;
  std::vector<BitVec> col_;  // col_[q] = bits of kernel rows at column q
};

}  // namespace rainbow

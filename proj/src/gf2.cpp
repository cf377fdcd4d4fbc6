#include "rainbow/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rainbow {

BitVec BitVec::from_support(std::size_t n, const std::vector<std::size_t>& idx) {
  BitVec v(n);
  for (auto i : idx) {
    if (i >= n) throw std::out_of_range("support index past vector length");
    v.set(i);
  }
  return v;
}

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i] == '1') v.set(i);
  return v;
}

std::size_t BitVec::weight() const {
  std::size_t s = 0;
  for (auto w : w_) s += std::popcount(w);
  return s;
}

bool BitVec::any() const {
  for (auto w : w_)
    if (w) return true;
  return false;
}

std::size_t BitVec::first() const { return next(0); }

std::size_t BitVec::next(std::size_t from) const {
  if (from >= n_) return n_;
  std::size_t k = from >> 6;
  std::uint64_t w = w_[k] & (~std::uint64_t(0) << (from & 63));
  while (true) {
    if (w) return (k << 6) + std::countr_zero(w);
    if (++k == w_.size()) return n_;
    w = w_[k];
  }
}

std::vector<std::size_t> BitVec::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    std::uint64_t w = w_[k];
    while (w) {
      out.push_back((k << 6) + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

std::string BitVec::str() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

static void check_len(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("bit vector length mismatch");
}

BitVec& BitVec::operator^=(const BitVec& o) {
  check_len(*this, o);
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
  check_len(*this, o);
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& o) {
  check_len(*this, o);
  for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
  return *this;
}

bool BitVec::operator<(const BitVec& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  for (std::size_t k = 0; k < w_.size(); ++k) {
    if (w_[k] == o.w_[k]) continue;
    std::uint64_t d = w_[k] ^ o.w_[k];
    // the vector owning the lowest differing bit sorts first
    return (w_[k] >> std::countr_zero(d)) & 1u;
  }
  return false;
}

void BitVec::xor_from(const BitVec& o, std::size_t from_word) {
  std::uint64_t* a = w_.data();
  const std::uint64_t* b = o.w_.data();
  const std::size_t n = w_.size();
  for (std::size_t k = from_word; k < n; ++k) a[k] ^= b[k];
}

std::size_t overlap(const BitVec& a, const BitVec& b) {
  check_len(a, b);
  std::size_t s = 0;
  for (std::size_t k = 0; k < a.nwords(); ++k) s += std::popcount(a.data()[k] & b.data()[k]);
  return s;
}

std::size_t dot(const BitVec& a, const BitVec& b) { return overlap(a, b) & 1u; }

// ---------------------------------------------------------------------------

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  BitMatrix m(c);
  for (auto& s : rows) {
    if (s.size() != c) throw std::invalid_argument("ragged rows");
    m.append(BitVec::from_string(s));
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::vector<BitVec> rows) {
  BitMatrix m(cols);
  for (auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("row length mismatch");
  m.r_ = std::move(rows);
  return m;
}

void BitMatrix::append(const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  r_.push_back(v);
}

void BitMatrix::append(const BitMatrix& m) {
  if (m.cols() != cols_) throw std::invalid_argument("column count mismatch");
  r_.insert(r_.end(), m.r_.begin(), m.r_.end());
}

std::vector<std::string> BitMatrix::strings() const {
  std::vector<std::string> out;
  for (auto& r : r_) out.push_back(r.str());
  return out;
}

std::size_t BitMatrix::max_row_weight() const {
  std::size_t w = 0;
  for (auto& r : r_) w = std::max(w, r.weight());
  return w;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto j : m.row(i).support()) t.set(j, i);
  return t;
}

BitMatrix vstack(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
  BitMatrix s = a;
  s.append(b);
  return s;
}

BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  BitMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto j : a.row(i).support()) c.row(i) ^= b.row(j);
  return c;
}

BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& cols) {
  BitMatrix s(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (m.get(i, cols[j])) s.set(i, j);
  return s;
}

// ---------------------------------------------------------------------------

bool RowSpace::add(const BitVec& v) {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace: length mismatch");
  BitVec r = v;
  std::size_t p = r.first();
  while (p < cols_) {
    long s = slot_[p];
    if (s < 0) {
      slot_[p] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(r));
      return true;
    }
    r.xor_from(rows_[s], p >> 6);
    p = r.next(p + 1);
  }
  return false;
}

BitVec RowSpace::reduce(BitVec r) const {
  if (r.size() != cols_) throw std::invalid_argument("RowSpace: length mismatch");
  std::size_t p = r.first();
  while (p < cols_) {
    long s = slot_[p];
    if (s >= 0) r.xor_from(rows_[s], p >> 6);
    p = r.next(p + 1);
  }
  return r;
}

std::size_t rank(const BitMatrix& m) {
  RowSpace rs(m.cols());
  for (auto& r : m.row_list()) rs.add(r);
  return rs.rank();
}

Echelon rref(const BitMatrix& m) {
  std::vector<BitVec> a = m.row_list();
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t i = r;
    while (i < a.size() && !a[i].get(c)) ++i;
    if (i == a.size()) continue;
    std::swap(a[i], a[r]);
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != r && a[j].get(c)) a[j].xor_from(a[r], c >> 6);
    piv.push_back(c);
    ++r;
  }
  a.resize(r);
  return {BitMatrix::from_rows(m.cols(), std::move(a)), std::move(piv)};
}

BitMatrix kernel(const BitMatrix& m) {
  const std::size_t n = m.cols();
  Echelon e = rref(m);
  std::vector<char> is_piv(n, 0);
  for (auto p : e.pivots) is_piv[p] = 1;
  BitMatrix k(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    BitVec v(n);
    v.set(f);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      if (e.basis.get(i, f)) v.set(e.pivots[i]);
    k.append(v);
  }
  return rref(k).basis;
}

BitMatrix span_intersection(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("span_intersection: column count mismatch");
  // kernel of [A^T | B^T]; the first rows(A) coordinates combine rows of A
  BitMatrix st = transpose(vstack(a, b));
  BitMatrix k = kernel(st);
  BitMatrix out(a.cols());
  for (auto& kv : k.row_list()) {
    BitVec v(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (kv.get(i)) v ^= a.row(i);
    out.append(v);
  }
  return rref(out).basis;
}

bool in_span(const BitVec& v, const BitMatrix& m) {
  if (v.size() != m.cols()) throw std::invalid_argument("in_span: length mismatch");
  RowSpace rs(m.cols());
  for (auto& r : m.row_list()) rs.add(r);
  return rs.contains(v);
}

BitMatrix invert(const BitMatrix& m) {
  const std::size_t k = m.rows();
  if (m.cols() != k) throw std::invalid_argument("invert: matrix is not square");
  BitMatrix aug(k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (auto j : m.row(i).support()) aug.set(i, j);
    aug.set(i, k + i);
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < k || (k > 0 && e.pivots[k - 1] != k - 1)) throw std::domain_error("matrix is singular");
  BitMatrix inv(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (e.basis.get(i, k + j)) inv.set(i, j);
  return inv;
}

SpanTester::SpanTester(const BitMatrix& m) : n_(m.cols()) {
  BitMatrix k = kernel(m);
  kdim_ = k.rows();
  col_.assign(n_, BitVec(kdim_));
  for (std::size_t i = 0; i < kdim_; ++i)
    for (auto q : k.row(i).support()) col_[q].set(i);
}

bool SpanTester::contains(const BitVec& v) const {
  if (v.size() != n_) throw std::invalid_argument("SpanTester: length mismatch");
  return contains_support(v.support());
}

bool SpanTester::contains_support(const std::vector<std::size_t>& idx) const {
  if (kdim_ == 0) return true;
  BitVec acc(kdim_);
  for (auto q : idx) acc ^= col_[q];
  return !acc.any();
}

}  // namespace rainbow

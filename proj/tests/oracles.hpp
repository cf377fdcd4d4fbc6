#pragma once

// Brute-force references on small codes. Vectors are bit masks, n <= 20.

#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rainbow/gf2.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline int wt(Mask m) { return std::popcount(m); }
inline int par(Mask m) { return std::popcount(m) & 1; }

inline std::vector<Mask> masks(const rainbow::BitMatrix& m) {
  std::vector<Mask> out;
  for (auto& r : m.row_list()) {
    Mask x = 0;
    for (auto q : r.support()) x |= Mask(1) << q;
    out.push_back(x);
  }
  return out;
}

inline rainbow::BitMatrix matrix(const std::vector<Mask>& rows, int n) {
  rainbow::BitMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int q = 0; q < n; ++q)
      if (rows[i] >> q & 1) m.set(i, q);
  return m;
}

// every vector in the row span, by closure
inline std::set<Mask> span(const std::vector<Mask>& rows) {
  std::set<Mask> s{0};
  for (Mask r : rows) {
    std::vector<Mask> add;
    for (Mask x : s) add.push_back(x ^ r);
    s.insert(add.begin(), add.end());
  }
  return s;
}

inline int rank(const std::vector<Mask>& rows) { return std::countr_zero(span(rows).size()); }

inline std::vector<Mask> kernel_vectors(const std::vector<Mask>& rows, int n) {
  std::vector<Mask> out;
  for (Mask v = 0; v < (Mask(1) << n); ++v) {
    bool ok = true;
    for (Mask r : rows)
      if (par(r & v)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

// lightest vector in ker(checks) outside span(stab); 0 when none
inline int min_logical(const std::vector<Mask>& checks, const std::vector<Mask>& stab, int n) {
  auto s = span(stab);
  int best = 0;
  for (Mask v : kernel_vectors(checks, n))
    if (!s.count(v) && (best == 0 || wt(v) < best)) best = wt(v);
  return best;
}

// random CSS pair on n qubits: hx random, hz random rows of ker(hx)
inline std::pair<std::vector<Mask>, std::vector<Mask>> random_css(std::mt19937_64& rng, int n, int mx, int mz) {
  std::vector<Mask> hx;
  for (int i = 0; i < mx; ++i) hx.push_back(static_cast<Mask>(rng()) & ((Mask(1) << n) - 1));
  auto ker = kernel_vectors(hx, n);
  std::vector<Mask> hz;
  for (int i = 0; i < mz; ++i) hz.push_back(ker[rng() % ker.size()]);
  return {hx, hz};
}

// Phase of transversal T (a=1) / Tdg (a=0) on basis state x, in units of pi/4.
inline int t_phase(Mask x, Mask a) { return ((2 * wt(x & a) - wt(x)) % 8 + 8) % 8; }

struct GateVerdict {
  bool preserved = false;  // every logical class picks up a single phase
  bool cubic = false;      // logical phase has a CCZ part
  bool two_body = false;      // CS part present
  bool non_clifford = false;  // T, CS or CCZ part present
  int k = 0;
  std::vector<int> phase;  // logical phase per u in [0, 2^k), when preserved
};

// Explicit simulation: the code space is spanned by uniform superpositions
// over cosets of span(hx) inside ker(hz). A diagonal gate keeps it iff the
// phase is constant on each coset.
inline GateVerdict transversal_gate(const std::vector<Mask>& hx, const std::vector<Mask>& hz, int n, Mask a) {
  GateVerdict v;
  auto sx = span(hx);
  std::vector<Mask> basis;  // logical representatives, greedy
  std::set<Mask> reach = sx;
  for (Mask c : kernel_vectors(hz, n)) {
    if (reach.count(c)) continue;
    basis.push_back(c);
    std::vector<Mask> add;
    for (Mask r : reach) add.push_back(r ^ c);
    reach.insert(add.begin(), add.end());
  }
  v.k = static_cast<int>(basis.size());
  for (Mask u = 0; u < (Mask(1) << v.k); ++u) {
    Mask rep = 0;
    for (int i = 0; i < v.k; ++i)
      if (u >> i & 1) rep ^= basis[i];
    int ph = t_phase(rep, a);
    for (Mask s : sx)
      if (t_phase(rep ^ s, a) != ph) return v;
    v.phase.push_back(ph);
  }
  v.preserved = true;
  // third differences along distinct unit directions pick out the cubic terms
  for (int i = 0; i < v.k; ++i)
    for (int j = i + 1; j < v.k; ++j)
      for (int l = j + 1; l < v.k; ++l) {
        Mask I = 1u << i, J = 1u << j, L = 1u << l;
        auto f = [&](Mask u) { return v.phase[u]; };
        int d = f(I | J | L) - f(I | J) - f(I | L) - f(J | L) + f(I) + f(J) + f(L) - f(0);
        if (((d % 8) + 8) % 8 == 4) v.cubic = true;
      }
  bool low = false;
  for (int i = 0; i < v.k; ++i) {
    low |= v.phase[1u << i] % 2 == 1;
    for (int j = i + 1; j < v.k; ++j) {
      int d = v.phase[(1u << i) | (1u << j)] - v.phase[1u << i] - v.phase[1u << j] + v.phase[0];
      v.two_body |= ((d % 4) + 4) % 4 == 2;
    }
  }
  v.non_clifford = v.cubic || v.two_body || low;
  return v;
}

}  // namespace oracle

#include "rainbow/distance.hpp"

#include <algorithm>
#include <atomic>
#include <cstring>
#include <mutex>
#include <random>

#include "rainbow/parallel.hpp"

namespace rainbow {

std::string side_name(Side s) {
  switch (s) {
    case Side::X: return "x";
    case Side::Z: return "z";
    case Side::both: return "both";
  }
  return "?";
}

Side parse_side(const std::string& s) {
  if (s == "x" || s == "X") return Side::X;
  if (s == "z" || s == "Z") return Side::Z;
  if (s == "both") return Side::both;
  throw ValidationError("side must be x, z or both");
}

std::optional<std::size_t> DistanceReport::certified() const {
  if (exact_floor && best && *exact_floor + 1 == best->weight) return best->weight;
  return std::nullopt;
}

std::uint64_t candidate_count(std::size_t n, std::size_t wmax) {
  const std::uint64_t cap = ~std::uint64_t(0);
  std::uint64_t total = 0;
  long double c = 1;
  for (std::size_t w = 1; w <= wmax && w <= n; ++w) {
    c = c * (n - w + 1) / w;
    if (c + total >= static_cast<long double>(cap)) return cap;
    total += static_cast<std::uint64_t>(c + 0.5L);
  }
  return total;
}

namespace {

// Column data for one side: syndromes against the opposite checks and the
// pairing pattern with the opposite logicals.
struct SideData {
  char side;
  std::size_t n = 0, k = 0, sw = 0, lw = 0;
  std::vector<std::uint64_t> syn, pat;  // n*sw, n*lw
};

SideData side_data(CssCode& code, char side) {
  compute_logicals(code);
  const BitMatrix& H = side == 'Z' ? code.hx : code.hz;
  const BitMatrix& L = side == 'Z' ? code.lx : code.lz;
  SideData d;
  d.side = side;
  d.n = code.n;
  d.k = code.k;
  Echelon e = rref(H);
  const std::size_t r = e.basis.rows();
  d.sw = std::max<std::size_t>(1, (r + 63) / 64);
  d.lw = std::max<std::size_t>(1, (d.k + 63) / 64);
  d.syn.assign(d.n * d.sw, 0);
  d.pat.assign(d.n * d.lw, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (auto q : e.basis.row(i).support()) d.syn[q * d.sw + i / 64] |= std::uint64_t(1) << (i % 64);
  for (std::size_t i = 0; i < d.k; ++i)
    for (auto q : L.row(i).support()) d.pat[q * d.lw + i / 64] |= std::uint64_t(1) << (i % 64);
  return d;
}

bool pattern_nonzero(const SideData& d, const std::vector<std::uint32_t>& sup) {
  std::vector<std::uint64_t> acc(d.lw, 0);
  for (auto q : sup)
    for (std::size_t j = 0; j < d.lw; ++j) acc[j] ^= d.pat[q * d.lw + j];
  for (auto x : acc)
    if (x) return true;
  return false;
}

// Lexicographically first logical of exactly weight w, or empty.
std::vector<std::uint32_t> search_weight(const SideData& d, std::size_t w) {
  const std::size_t n = d.n, sw = d.sw, lw = d.lw;
  // columns sorted by syndrome for the final lookup
  std::vector<std::uint32_t> order(n);
  for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
  auto syn_less = [&](std::uint32_t a, std::uint32_t b) {
    int c = std::memcmp(&d.syn[a * sw], &d.syn[b * sw], sw * 8);
    return c != 0 ? c < 0 : a < b;
  };
  std::sort(order.begin(), order.end(), syn_less);

  auto lookup = [&](const std::uint64_t* s) {
    auto lo = std::lower_bound(order.begin(), order.end(), s, [&](std::uint32_t a, const std::uint64_t* key) {
      return std::memcmp(&d.syn[a * sw], key, sw * 8) < 0;
    });
    auto hi = lo;
    while (hi != order.end() && std::memcmp(&d.syn[*hi * sw], s, sw * 8) == 0) ++hi;
    return std::make_pair(lo, hi);
  };

  if (w == 1) {
    std::vector<std::uint64_t> zero(sw, 0);
    auto [lo, hi] = lookup(zero.data());
    for (auto it = lo; it != hi; ++it)
      if (pattern_nonzero(d, {*it})) return {*it};
    return {};
  }

  std::atomic<std::size_t> found_at{n};
  std::mutex mu;
  std::vector<std::uint32_t> result;
  std::size_t result_q1 = n;

  parallel_for(n, [&](int, std::size_t q1) {
    if (q1 >= found_at.load()) return;
    std::vector<std::uint64_t> S((w) * sw, 0), P((w) * lw, 0);
    std::vector<std::uint32_t> pick(w);
    pick[0] = static_cast<std::uint32_t>(q1);
    std::memcpy(&S[sw], &d.syn[q1 * sw], sw * 8);
    std::memcpy(&P[lw], &d.pat[q1 * lw], lw * 8);
    // depth = number of chosen columns; S[depth] holds their syndrome sum
    std::vector<std::uint32_t> hit;
    auto rec = [&](auto&& self, std::size_t depth, std::uint32_t start) -> bool {
      const std::uint64_t* s = &S[depth * sw];
      const std::uint64_t* p = &P[depth * lw];
      if (depth == w - 1) {
        auto [lo, hi] = lookup(s);
        std::uint32_t bestc = UINT32_MAX;
        for (auto it = lo; it != hi; ++it) {
          std::uint32_t c = *it;
          if (c < start || c >= bestc) continue;
          if (std::memcmp(&d.pat[c * lw], p, lw * 8) != 0) bestc = c;
        }
        if (bestc == UINT32_MAX) return false;
        pick[depth] = bestc;
        hit = pick;
        return true;
      }
      for (std::uint32_t c = start; c + (w - 1 - depth) < n; ++c) {
        pick[depth] = c;
        std::uint64_t* s2 = &S[(depth + 1) * sw];
        std::uint64_t* p2 = &P[(depth + 1) * lw];
        for (std::size_t j = 0; j < sw; ++j) s2[j] = s[j] ^ d.syn[c * sw + j];
        for (std::size_t j = 0; j < lw; ++j) p2[j] = p[j] ^ d.pat[c * lw + j];
        if (self(self, depth + 1, c + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 1, static_cast<std::uint32_t>(q1 + 1))) {
      std::lock_guard<std::mutex> lk(mu);
      if (q1 < result_q1) {
        result_q1 = q1;
        result = hit;
      }
      std::size_t cur = found_at.load();
      while (q1 < cur && !found_at.compare_exchange_weak(cur, q1)) {
      }
    }
  });
  return result;
}

DistanceReport exact_one(CssCode& code, char side, std::size_t wmax) {
  DistanceReport r;
  r.side = side == 'X' ? Side::X : Side::Z;
  r.method = "exhaustive";
  r.wmax = wmax;
  SideData d = side_data(code, side);
  if (d.k == 0) {
    r.exact_floor = wmax;
    return r;
  }
  for (std::size_t w = 1; w <= wmax && w <= d.n; ++w) {
    auto sup = search_weight(d, w);
    if (!sup.empty()) {
      BitVec v(d.n);
      for (auto q : sup) v.set(q);
      r.exact_floor = w - 1;
      r.best = Witness{side, w, v};
      return r;
    }
  }
  r.exact_floor = wmax;
  return r;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Hit {
  std::size_t weight = SIZE_MAX;
  std::size_t iter = SIZE_MAX;
  std::vector<std::uint32_t> sup;
};

DistanceReport isd_one(CssCode& code, char side, std::size_t iterations, std::uint64_t seed) {
  DistanceReport rep;
  rep.side = side == 'X' ? Side::X : Side::Z;
  rep.method = "isd";
  rep.iterations = iterations;
  rep.seed = seed;
  SideData d = side_data(code, side);
  if (d.k == 0) return rep;
  const std::size_t n = d.n;
  const BitMatrix& H = side == 'Z' ? code.hx : code.hz;
  Echelon eh = rref(H);
  const std::size_t r = eh.basis.rows();
  // work with whichever of the check basis and the code basis is smaller
  const bool parity_mode = r <= n - r;
  BitMatrix base = parity_mode ? eh.basis : kernel(H);

  std::vector<Hit> best(std::max(1, worker_count()));
  parallel_for(iterations, [&](int wk, std::size_t it) {
    std::mt19937_64 rng(splitmix(seed ^ splitmix(it + 1)));
    std::vector<std::uint32_t> perm(n), pos(n);
    for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    for (std::uint32_t i = 0; i < n; ++i) pos[perm[i]] = i;  // column q -> position
    BitMatrix pm(n);
    for (auto& row : base.row_list()) {
      BitVec v(n);
      for (auto q : row.support()) v.set(pos[q]);
      pm.append(v);
    }
    Echelon e = rref(pm);
    // candidates ranked by weight; supports built only when examined
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (weight, index)
    std::vector<char> piv;
    if (parity_mode) {
      piv.assign(n, 0);
      for (auto p : e.pivots) piv[p] = 1;
      std::vector<std::size_t> cnt(n, 1);
      for (std::size_t i = 0; i < e.basis.rows(); ++i)
        for (auto j : e.basis.row(i).support()) ++cnt[j];
      for (std::size_t j = 0; j < n; ++j)
        if (!piv[j]) order.push_back({cnt[j], j});
    } else {
      for (std::size_t i = 0; i < e.basis.rows(); ++i) order.push_back({e.basis.row(i).weight(), i});
    }
    std::sort(order.begin(), order.end());
    Hit& b = best[wk];
    std::vector<std::uint32_t> s;
    for (auto [w, idx] : order) {
      if (w > b.weight || (w == b.weight && it > b.iter)) break;
      s.clear();
      if (parity_mode) {
        s.push_back(perm[idx]);
        for (std::size_t i = 0; i < e.basis.rows(); ++i)
          if (e.basis.get(i, idx)) s.push_back(perm[e.pivots[i]]);
      } else {
        for (auto j : e.basis.row(idx).support()) s.push_back(perm[j]);
      }
      std::sort(s.begin(), s.end());
      if (!pattern_nonzero(d, s)) continue;
      b.weight = w;
      b.iter = it;
      b.sup = s;
      break;
    }
  });
  Hit h;
  for (auto& b : best)
    if (b.weight < h.weight || (b.weight == h.weight && b.iter < h.iter)) h = b;
  if (h.weight != SIZE_MAX) {
    BitVec v(n);
    for (auto q : h.sup) v.set(q);
    rep.best = Witness{side, h.weight, v};
  }
  return rep;
}

}  // namespace

bool is_nontrivial_logical(CssCode& code, char side, const BitVec& v) {
  compute_logicals(code);
  const BitMatrix& H = side == 'Z' ? code.hx : code.hz;
  const BitMatrix& S = side == 'Z' ? code.hz : code.hx;
  for (auto& h : H.row_list())
    if (dot(h, v)) return false;
  return !in_span(v, S);
}

DistanceReport combine_sides(const DistanceReport& x, const DistanceReport& z) {
  DistanceReport r = x;
  r.side = Side::both;
  if (x.exact_floor && z.exact_floor)
    r.exact_floor = std::min(*x.exact_floor, *z.exact_floor);
  else
    r.exact_floor.reset();
  if (!r.best || (z.best && z.best->weight < r.best->weight)) r.best = z.best;
  return r;
}

DistanceReport with_witness(const DistanceReport& exact, const DistanceReport& search) {
  DistanceReport r = exact;
  if (search.best && (!r.best || search.best->weight < r.best->weight)) r.best = search.best;
  r.iterations = search.iterations;
  r.seed = search.seed;
  if (!exact.method.empty() && !search.method.empty()) r.method = exact.method + "+" + search.method;
  return r;
}

DistanceReport exact_distance_upto(CssCode& code, Side side, std::size_t wmax, std::uint64_t budget) {
  std::uint64_t need = candidate_count(code.n, wmax);
  if (side == Side::both && need < budget / 2 + 1) need *= 2;
  if (need > budget)
    throw BudgetError("exhaustive search to weight " + std::to_string(wmax) + " on " + std::to_string(code.n) +
                      " qubits needs " + std::to_string(need) + " candidates, budget is " + std::to_string(budget));
  if (side == Side::X) return exact_one(code, 'X', wmax);
  if (side == Side::Z) return exact_one(code, 'Z', wmax);
  return combine_sides(exact_one(code, 'X', wmax), exact_one(code, 'Z', wmax));
}

DistanceReport isd_upper_bound(CssCode& code, Side side, std::size_t iterations, std::uint64_t seed) {
  if (side == Side::X) return isd_one(code, 'X', iterations, seed);
  if (side == Side::Z) return isd_one(code, 'Z', iterations, seed);
  DistanceReport r = combine_sides(isd_one(code, 'X', iterations, seed), isd_one(code, 'Z', iterations, seed));
  r.exact_floor.reset();
  return r;
}

}  // namespace rainbow

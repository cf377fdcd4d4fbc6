#include "rainbow/triorth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace rainbow {

Bipartition find_bipartition(const SimplexGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> side(n, -1);
  std::deque<std::uint32_t> q;
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 1;
    q.push_back(static_cast<std::uint32_t>(s));
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (int c = 0; c < g.colours(); ++c)
        for (auto u : g.nbrs(v, c)) {
          if (side[u] < 0) {
            side[u] = 1 - side[v];
            q.push_back(u);
          } else if (side[u] == side[v]) {
            throw ValidationError("flag graph is not bipartite (edge " + std::to_string(v) + "-" +
                                  std::to_string(u) + ")");
          }
        }
    }
  }
  Bipartition a(n);
  for (std::size_t v = 0; v < n; ++v)
    if (side[v] == 1) a.set(v);
  return a;
}

Bipartition orientation_bipartition(const std::vector<LevelledGraph>& factors) {
  const int D = static_cast<int>(factors.size());
  // edge sign per factor: +1 when its trail runs level 0 -> level 1
  std::vector<std::map<std::pair<int, int>, int>> sgn(D);
  for (int j = 0; j < D; ++j) {
    if (!is_all_even_degree(factors[j])) throw ValidationError("orientation needs even-degree factors");
    for (auto& trail : cycle_decomposition(factors[j]))
      for (std::size_t t = 0; t < trail.size(); ++t) {
        int x = trail[t], y = trail[(t + 1) % trail.size()];
        sgn[j][{std::min(x, y), std::max(x, y)}] = factors[j].level[x] == 0 ? 1 : -1;
      }
  }
  ProductGraph pg = cartesian_product(factors);
  FlagList fl = enumerate_flags(pg);
  Bipartition a(fl.size());
  std::vector<int> order(D);
  for (std::size_t f = 0; f < fl.size(); ++f) {
    int s = 1;
    for (int i = 0; i < D; ++i) {
      const auto& lo = pg.tuple[fl.cell(f, i)];
      const auto& hi = pg.tuple[fl.cell(f, i + 1)];
      int j = 0;
      while (lo[j] == hi[j]) ++j;
      order[i] = j;
      s *= sgn[j].at({std::min(lo[j], hi[j]), std::max(lo[j], hi[j])});
    }
    for (int i = 0; i < D; ++i)
      for (int k = i + 1; k < D; ++k)
        if (order[i] > order[k]) s = -s;
    if (s > 0) a.set(f);
  }
  return a;
}

namespace {

using Supp = std::vector<std::size_t>;

std::string rows_str(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + " " + std::to_string(i) + "," + std::to_string(j);
}

std::vector<Supp> supports(const BitMatrix& m) {
  std::vector<Supp> out;
  out.reserve(m.rows());
  for (auto& r : m.row_list()) out.push_back(r.support());
  return out;
}

std::vector<std::vector<std::uint32_t>> rows_at(std::size_t n, const std::vector<Supp>& s) {
  std::vector<std::vector<std::uint32_t>> at(n);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (auto q : s[i]) at[q].push_back(static_cast<std::uint32_t>(i));
  return at;
}

std::size_t count_in(const Supp& s, const Bipartition& a) {
  std::size_t c = 0;
  for (auto q : s) c += a.get(q);
  return c;
}

}  // namespace

TriorthReport check_triorthogonality(CssCode& code, const Bipartition& a) {
  if (a.size() != code.n) throw ValidationError("bipartition length does not match the code");
  compute_logicals(code);
  const std::size_t n = code.n;
  TriorthReport rep;
  SpanTester tz(code.hz);
  SpanTester tzl(vstack(code.hz, code.lz));

  auto hxs = supports(code.hx);
  auto lxs = supports(code.lx);
  auto hat = rows_at(n, hxs);
  auto lat = rows_at(n, lxs);
  auto fail = [&](int c, std::string why) {
    if (rep.cond[c].pass) {
      rep.cond[c].pass = false;
      rep.cond[c].counterexample = std::move(why);
    }
  };

  std::vector<std::int32_t> mark(n, -1);
  std::vector<std::uint32_t> seen_h(hxs.size(), 0), seen_l(lxs.size(), 0);
  std::uint32_t stamp = 0;

  // 1 and 2: products involving a stabiliser row
  for (std::size_t i = 0; i < hxs.size(); ++i) {
    ++stamp;
    for (std::size_t t = 0; t < hxs[i].size(); ++t) mark[hxs[i][t]] = static_cast<std::int32_t>(t);
    std::vector<std::uint32_t> hn, ln;
    for (auto q : hxs[i]) {
      for (auto j : hat[q])
        if (seen_h[j] != stamp) seen_h[j] = stamp, hn.push_back(j);
      for (auto j : lat[q])
        if (seen_l[j] != stamp) seen_l[j] = stamp, ln.push_back(j);
    }
    std::sort(hn.begin(), hn.end());
    std::sort(ln.begin(), ln.end());
    Supp p;
    if (rep.cond[0].pass)
      for (auto j : hn) {
        if (j <= i) continue;
        p.clear();
        for (auto q : hxs[j])
          if (mark[q] >= 0) p.push_back(q);
        if (!tz.contains_support(p)) {
          fail(0, rows_str("X stabiliser rows", i, j));
          break;
        }
      }
    if (rep.cond[1].pass)
      for (auto j : ln) {
        p.clear();
        for (auto q : lxs[j])
          if (mark[q] >= 0) p.push_back(q);
        if (!tz.contains_support(p)) {
          fail(1, rows_str("X stabiliser row / X logical", i, j));
          break;
        }
      }

    // 4
    if (rep.cond[3].pass) {
      std::size_t w = hxs[i].size(), t = count_in(hxs[i], a);
      if ((2 * t) % 8 != w % 8)
        fail(3, "X stabiliser row " + std::to_string(i) + ": weight " + std::to_string(w) + ", T count " +
                    std::to_string(t));
    }

    // 5: x_i times y or y+w for y,w among rows of hx and lx touching x_i,
    // in coordinates local to x_i
    if (rep.cond[4].pass) {
      const std::size_t m = hxs[i].size();
      std::vector<BitVec> loc;
      auto add_local = [&](const Supp& s) {
        BitVec v(m);
        for (auto q : s)
          if (mark[q] >= 0) v.set(static_cast<std::size_t>(mark[q]));
        if (v.any()) loc.push_back(std::move(v));
      };
      for (auto j : hn) add_local(hxs[j]);
      for (auto j : ln) add_local(lxs[j]);
      std::sort(loc.begin(), loc.end());
      loc.erase(std::unique(loc.begin(), loc.end()), loc.end());
      std::set<BitVec> done;
      auto test = [&](const BitVec& lp) {
        if (!lp.any() || !done.insert(lp).second) return true;
        Supp g;
        std::size_t t = 0;
        for (auto b : lp.support()) {
          g.push_back(hxs[i][b]);
          t += a.get(hxs[i][b]);
        }
        if (!tz.contains_support(g)) return true;
        return (2 * t) % 4 == g.size() % 4;
      };
      bool ok = true;
      for (std::size_t u = 0; u < loc.size() && ok; ++u) {
        ok = test(loc[u]);
        for (std::size_t v = u + 1; v < loc.size() && ok; ++v) ok = test(loc[u] ^ loc[v]);
      }
      if (!ok) fail(4, "X stabiliser row " + std::to_string(i) + ": pair product with wrong T count mod 4");
    }
    for (auto q : hxs[i]) mark[q] = -1;
  }

  // 3: logical pairs
  bool some_logical = false;
  for (std::size_t i = 0; i < lxs.size() && rep.cond[2].pass; ++i)
    for (std::size_t j = i + 1; j < lxs.size(); ++j) {
      BitVec p = code.lx.row(i) & code.lx.row(j);
      if (!p.any()) continue;
      auto s = p.support();
      if (!tzl.contains_support(s)) {
        fail(2, rows_str("X logicals", i, j) + ": product is not a Z stabiliser or logical");
        break;
      }
      if (!some_logical && !tz.contains_support(s)) some_logical = true;
    }
  if (rep.cond[2].pass && !some_logical) fail(2, "every logical pair product is a stabiliser");

  rep.gate_found = std::all_of(rep.cond.begin(), rep.cond.end(), [](auto& c) { return c.pass; });
  return rep;
}

std::vector<std::tuple<int, int, int>> ccz_interactions(CssCode& code, const TriorthReport& r) {
  if (!r.gate_found) throw ValidationError("code is not triorthogonal; no transversal gate to analyse");
  compute_logicals(code);
  const std::size_t k = code.k;
  std::vector<std::tuple<int, int, int>> out;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      BitVec ij = code.lx.row(i) & code.lx.row(j);
      if (!ij.any()) continue;
      for (std::size_t l = j + 1; l < k; ++l)
        if (dot(ij, code.lx.row(l))) out.emplace_back(int(i), int(j), int(l));
    }
  return out;
}

std::vector<std::tuple<int, int, int>> ccz_interactions(CssCode& code, const Bipartition& a) {
  return ccz_interactions(code, check_triorthogonality(code, a));
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// low-weight vectors of span(g): reduced rows under random column orders
std::vector<BitVec> isd_pool(const BitMatrix& g, std::size_t iterations, std::uint64_t seed) {
  const std::size_t n = g.cols();
  std::vector<BitVec> pool;
  std::vector<std::size_t> perm(n);
  for (std::size_t it = 0; it <= iterations; ++it) {
    std::iota(perm.begin(), perm.end(), 0);
    if (it > 0) {
      std::mt19937_64 rng(mix(seed ^ mix(it)));
      std::shuffle(perm.begin(), perm.end(), rng);
    }
    Echelon e = rref(select_columns(g, perm));
    for (auto& r : e.basis.row_list()) {
      BitVec v(n);
      for (auto b : r.support()) v.set(perm[b]);
      pool.push_back(std::move(v));
    }
  }
  return pool;
}

}  // namespace

std::vector<int> colour_logical_basis(CssCode& code, const SimplexGraph& g, const std::vector<int>& colour_order,
                                      std::size_t iterations, std::uint64_t seed) {
  compute_logicals(code);
  const std::size_t n = code.n, k = code.k;
  std::vector<int> colour_of;
  if (k == 0) return colour_of;
  RowSpace rs(n);
  for (auto& r : code.hz.row_list()) rs.add(r);
  BitMatrix lz(n);
  BitMatrix hxt = transpose(code.hx);
  for (int c : colour_order) {
    if (lz.rows() == k) break;
    BitMatrix mc = support_matrix(n, maximal_subgraphs(g, colour_bit(c)));
    BitMatrix lam = kernel(transpose(matmul(mc, hxt)));
    BitMatrix gc = matmul(lam, mc);
    if (gc.rows() == 0) continue;
    auto pool = isd_pool(gc, iterations, seed + static_cast<std::uint64_t>(c));
    std::vector<std::pair<std::size_t, BitVec>> cand;
    for (auto& v : pool) {
      bool nontrivial = false;
      for (auto& l : code.lx.row_list())
        if (dot(l, v)) {
          nontrivial = true;
          break;
        }
      if (nontrivial) cand.emplace_back(v.weight(), v);
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    for (auto& [w, v] : cand) {
      if (lz.rows() == k) break;
      if (rs.add(v)) {
        lz.append(v);
        colour_of.push_back(c);
      }
    }
  }
  for (auto& v : code.lz.row_list()) {
    if (lz.rows() == k) break;
    if (rs.add(v)) {
      lz.append(v);
      colour_of.push_back(-1);
    }
  }
  BitMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (dot(code.lx.row(i), lz.row(j))) m.set(i, j);
  // (A lx) lz^T = A m = I
  code.lx = matmul(invert(m), code.lx);
  code.lz = std::move(lz);
  return colour_of;
}

}  // namespace rainbow

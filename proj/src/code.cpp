#include "rainbow/code.hpp"

#include <algorithm>

namespace rainbow {

std::string class_name(CodeClass c) {
  switch (c) {
    case CodeClass::pin: return "pin";
    case CodeClass::generic: return "generic";
    case CodeClass::anti_generic: return "anti_generic";
    case CodeClass::mixed: return "mixed";
  }
  return "?";
}

CodeClass parse_class(const std::string& s) {
  if (s == "pin") return CodeClass::pin;
  if (s == "generic") return CodeClass::generic;
  if (s == "anti_generic" || s == "anti-generic" || s == "antigeneric") return CodeClass::anti_generic;
  if (s == "mixed") return CodeClass::mixed;
  throw ValidationError("unknown assignment class '" + s + "'");
}

void check_assignment(const Assignment& a, int D) {
  auto bad = [&](const std::string& why) {
    throw ValidationError(class_name(a.cls) + " x=" + std::to_string(a.x) + " z=" + std::to_string(a.z) +
                          " D=" + std::to_string(D) + ": " + why);
  };
  if (a.x < 2 || a.z < 2 || a.x > D || a.z > D) bad("need 2 <= x,z <= D");
  if (a.x + a.z < D + 2) bad("need x + z >= D + 2");
  if (a.cls == CodeClass::mixed) {
    if (D < 3) bad("mixed assignment is only defined for D >= 3");
    if (a.x != D || a.z != 2) bad("mixed assignment requires x = D and z = 2");
  }
}

std::vector<Family> families_for(const Assignment& a, int D) {
  check_assignment(a, D);
  const int nc = D + 1;
  std::vector<Family> out;
  auto add_all = [&](char side, SubgraphKind kind, int m) {
    for (auto s : colour_subsets(nc, m)) out.push_back({side, kind, s});
  };
  switch (a.cls) {
    case CodeClass::pin:
      add_all('X', SubgraphKind::maximal, a.x);
      add_all('Z', SubgraphKind::maximal, a.z);
      break;
    case CodeClass::generic:
      add_all('X', SubgraphKind::maximal, a.x);
      add_all('Z', SubgraphKind::rainbow, a.z);
      break;
    case CodeClass::anti_generic:
      add_all('X', SubgraphKind::rainbow, a.x);
      add_all('Z', SubgraphKind::maximal, a.z);
      break;
    case CodeClass::mixed: {
      ColourSet low = all_colours(D);          // c0..c_{D-1}
      ColourSet high = all_colours(nc) & ~1u;  // c1..c_D
      for (auto s : colour_subsets(nc, D))
        out.push_back({'X', (s == low || s == high) ? SubgraphKind::rainbow : SubgraphKind::maximal, s});
      ColourSet ends = colour_bit(0) | colour_bit(D);
      for (auto s : colour_subsets(nc, 2))
        out.push_back({'Z', s == ends ? SubgraphKind::maximal : SubgraphKind::rainbow, s});
      break;
    }
  }
  return out;
}

void check_commutation(const BitMatrix& hx, const BitMatrix& hz) {
  if (hx.cols() != hz.cols()) throw ValidationError("X and Z checks have different widths");
  std::vector<std::vector<std::uint32_t>> rows_at(hz.cols());
  for (std::size_t j = 0; j < hz.rows(); ++j)
    for (auto q : hz.row(j).support()) rows_at[q].push_back(static_cast<std::uint32_t>(j));
  std::vector<std::uint32_t> cnt(hz.rows(), 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t i = 0; i < hx.rows(); ++i) {
    touched.clear();
    for (auto q : hx.row(i).support())
      for (auto j : rows_at[q]) {
        if (cnt[j]++ == 0) touched.push_back(j);
      }
    std::sort(touched.begin(), touched.end());
    for (auto j : touched) {
      if (cnt[j] % 2)
        throw ValidationError("X row " + std::to_string(i) + " and Z row " + std::to_string(j) +
                              " overlap on " + std::to_string(cnt[j]) + " qubits");
    }
    for (auto j : touched) cnt[j] = 0;
  }
}

CssCode make_css(BitMatrix hx, BitMatrix hz) {
  check_commutation(hx, hz);
  CssCode c;
  c.n = hx.cols();
  c.hx = std::move(hx);
  c.hz = std::move(hz);
  c.rank_x = rank(c.hx);
  c.rank_z = rank(c.hz);
  c.k = c.n - c.rank_x - c.rank_z;
  return c;
}

CssCode assemble_families(const SimplexGraph& g, const std::vector<Family>& fams) {
  const std::size_t n = g.size();
  BitMatrix hx(n), hz(n);
  std::vector<RowOrigin> ox, oz;
  auto put = [&](char side, const std::vector<Subgraph>& subs, SubgraphKind kind, ColourSet s) {
    auto& m = side == 'X' ? hx : hz;
    auto& o = side == 'X' ? ox : oz;
    for (auto& sg : subs) {
      m.append(support_vector(n, sg.support));
      o.push_back({kind, s});
    }
  };
  for (auto& f : fams)
    if (f.colours >> g.colours()) throw ValidationError("family colour outside the simplex graph");
  // maximal and two-colour rainbow families first
  for (auto& f : fams) {
    if (f.kind == SubgraphKind::maximal) {
      put(f.side, maximal_subgraphs(g, f.colours), f.kind, f.colours);
    } else if (colour_count(f.colours) == 2) {
      auto cl = colour_list(f.colours);
      put(f.side, rainbow_two(g, cl[0], cl[1]), f.kind, f.colours);
    } else if (colour_count(f.colours) < 2) {
      throw ValidationError("rainbow family needs at least two colours");
    }
  }
  for (char side : {'X', 'Z'})
    for (auto& f : fams)
      if (f.side == side && f.kind == SubgraphKind::rainbow && colour_count(f.colours) > 2)
        put(side, rainbow_multi_subgraphs(g, f.colours, side == 'X' ? hz : hx), f.kind, f.colours);

  CssCode c = make_css(std::move(hx), std::move(hz));
  c.x_origin = std::move(ox);
  c.z_origin = std::move(oz);
  return c;
}

CssCode assemble(const SimplexGraph& g, const Assignment& a) {
  CssCode c = assemble_families(g, families_for(a, g.dim()));
  c.assignment = a;
  return c;
}

namespace {

// rows of basis independent of `seed`, in order, up to `want` of them
BitMatrix complement_rows(const BitMatrix& seed, const BitMatrix& candidates) {
  RowSpace rs(seed.cols());
  for (auto& r : seed.row_list()) rs.add(r);
  BitMatrix out(seed.cols());
  for (auto& r : candidates.row_list())
    if (rs.add(r)) out.append(r);
  return out;
}

}  // namespace

void compute_logicals(CssCode& code) {
  if (code.has_logicals) return;
  BitMatrix lx = complement_rows(code.hx, kernel(code.hz));
  BitMatrix lz = complement_rows(code.hz, kernel(code.hx));
  if (lx.rows() != code.k || lz.rows() != code.k) throw std::logic_error("logical count disagrees with k");
  if (code.k > 0) {
    BitMatrix m(code.k, code.k);
    for (std::size_t i = 0; i < code.k; ++i)
      for (std::size_t j = 0; j < code.k; ++j)
        if (dot(lx.row(i), lz.row(j))) m.set(i, j);
    lz = matmul(transpose(invert(m)), lz);
  }
  code.lx = std::move(lx);
  code.lz = std::move(lz);
  code.has_logicals = true;
}

std::pair<BitMatrix, BitMatrix> logical_basis(CssCode& code) {
  compute_logicals(code);
  return {code.lx, code.lz};
}

BitVec reduce_weight(const BitVec& v, const BitMatrix& stab) {
  BitVec cur = v;
  std::size_t w = cur.weight();
  bool improved = true;
  while (improved) {
    improved = false;
    for (auto& s : stab.row_list()) {
      BitVec t = cur ^ s;
      std::size_t tw = t.weight();
      if (tw < w) {
        cur = std::move(t);
        w = tw;
        improved = true;
      }
    }
  }
  return cur;
}

BitMatrix coloured_logicals(CssCode& code, const SimplexGraph& g, ColourSet colours, char side) {
  compute_logicals(code);
  const std::size_t n = code.n;
  BitMatrix out(n);
  if (code.k == 0) return out;
  ColourSet inv = all_colours(g.colours()) & ~colours;
  BitMatrix M = support_matrix(n, maximal_subgraphs(g, inv));
  const BitMatrix& S = side == 'X' ? code.hx : code.hz;
  const BitMatrix& L = side == 'X' ? code.lx : code.lz;
  BitMatrix inter = span_intersection(M, vstack(S, L));
  return complement_rows(S, inter);
}

std::size_t predicted_k(const Assignment& a, const std::vector<int>& nc, int D) {
  std::size_t total = 0;
  auto prod_except = [&](std::size_t i) {
    std::size_t p = 1;
    for (std::size_t j = 0; j < nc.size(); ++j)
      if (j != i) p *= nc[j];
    return p;
  };
  switch (a.cls) {
    case CodeClass::pin:
      throw ValidationError("no closed-form k for the pin class");
    case CodeClass::generic:
      for (int c : nc) total += static_cast<std::size_t>(D) * c;
      return total;
    case CodeClass::anti_generic:
      for (std::size_t i = 0; i < nc.size(); ++i) total += static_cast<std::size_t>(D) * prod_except(i);
      return total;
    case CodeClass::mixed:
      for (std::size_t i = 0; i < nc.size(); ++i) total += static_cast<std::size_t>(D - 1) * nc[i] + prod_except(i);
      return total;
  }
  return total;
}

}  // namespace rainbow

#include "rainbow/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace rainbow {

using nlohmann::json;

LevelledGraph graph_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("graph JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j.contains("edges")) throw ValidationError("graph JSON needs vertices and edges");
  std::map<long, int> id;
  std::vector<int> levels;
  for (auto& v : j["vertices"]) {
    long key = v.at("id").get<long>();
    int lv = v.at("level").get<int>();
    if (lv != 0 && lv != 1) throw ValidationError("vertex level must be 0 or 1");
    if (!id.emplace(key, static_cast<int>(levels.size())).second)
      throw ValidationError("duplicate vertex id " + std::to_string(key));
    levels.push_back(lv);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("edges are pairs of vertex ids");
    auto a = id.find(e[0].get<long>()), b = id.find(e[1].get<long>());
    if (a == id.end() || b == id.end()) throw ValidationError("edge names an unknown vertex");
    edges.emplace_back(a->second, b->second);
  }
  try {
    return make_graph(std::move(levels), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

std::string graph_to_json(const LevelledGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.size(); ++v) j["vertices"].push_back({{"id", v}, {"level", g.level[v]}});
  j["edges"] = json::array();
  for (auto& [a, b] : g.edges) j["edges"].push_back({a, b});
  return j.dump();
}

LevelledGraph load_factor(const std::string& source) {
  if (source.find(':') != std::string::npos || source == "fig8") {
    try {
      return graph_from_shorthand(source);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }
  return graph_from_json(read_file(source));
}

std::vector<std::string> split_factor_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    bool numeric = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
    // "kbip:4,4": a bare number continues the previous factor
    if (numeric && !out.empty() && out.back().rfind("kbip:", 0) == 0 && out.back().find(',') == std::string::npos)
      out.back() += "," + tok;
    else if (!tok.empty())
      out.push_back(tok);
  }
  return out;
}

std::string simplex_graph_json(const SimplexGraph& g) {
  json j;
  j["colours"] = g.colours();
  j["flags"] = json::array();
  if (g.has_flags()) {
    const auto& fl = g.flags();
    for (std::size_t f = 0; f < fl.size(); ++f) {
      json cell = json::array();
      for (int i = 0; i <= fl.dim; ++i) cell.push_back(fl.cell(f, i));
      j["flags"].push_back(cell);
    }
  }
  j["edges"] = json::array();
  for (auto& e : g.edges()) j["edges"].push_back({e.u, e.v, e.colour});
  return j.dump();
}

std::string subgraph_json_line(const Subgraph& s) {
  json j;
  j["kind"] = kind_name(s.kind);
  j["colours"] = colour_string(s.colours);
  j["support"] = s.support;
  return j.dump();
}

std::string to_alist(const BitMatrix& h) {
  const std::size_t n = h.cols(), m = h.rows();
  std::vector<std::vector<std::size_t>> col(n), row(m);
  for (std::size_t i = 0; i < m; ++i)
    for (auto q : h.row(i).support()) {
      row[i].push_back(q);
      col[q].push_back(i);
    }
  std::size_t cmax = 0, rmax = 0;
  for (auto& c : col) cmax = std::max(cmax, c.size());
  for (auto& r : row) rmax = std::max(rmax, r.size());
  std::ostringstream o;
  o << n << ' ' << m << '\n' << cmax << ' ' << rmax << '\n';
  auto degs = [&](const std::vector<std::vector<std::size_t>>& l) {
    for (std::size_t i = 0; i < l.size(); ++i) o << (i ? " " : "") << l[i].size();
    o << '\n';
  };
  degs(col);
  degs(row);
  auto lists = [&](const std::vector<std::vector<std::size_t>>& l, std::size_t width) {
    for (auto& x : l) {
      for (std::size_t t = 0; t < width; ++t) o << (t ? " " : "") << (t < x.size() ? x[t] + 1 : 0);
      o << '\n';
    }
  };
  lists(col, cmax);
  lists(row, rmax);
  return o.str();
}

BitMatrix from_alist(const std::string& text) {
  std::istringstream in(text);
  std::size_t n, m, cmax, rmax;
  if (!(in >> n >> m >> cmax >> rmax)) throw ValidationError("alist: bad header");
  std::vector<std::size_t> cd(n), rd(m);
  for (auto& d : cd) in >> d;
  for (auto& d : rd) in >> d;
  BitMatrix h(m, n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t t = 0; t < cmax; ++t) {
      std::size_t r;
      if (!(in >> r)) throw ValidationError("alist: truncated column lists");
      if (r == 0) continue;
      if (r > m || t >= cd[q]) throw ValidationError("alist: column entry out of range");
      h.set(r - 1, q);
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < rmax; ++t) {
      std::size_t c;
      if (!(in >> c)) throw ValidationError("alist: truncated row lists");
      if (c == 0) continue;
      if (c > n || !h.get(i, c - 1)) throw ValidationError("alist: row and column lists disagree");
    }
  for (std::size_t i = 0; i < m; ++i)
    if (h.row(i).weight() != rd[i]) throw ValidationError("alist: row degree mismatch");
  return h;
}

std::string to_dense(const BitMatrix& h) {
  std::string s;
  for (auto& r : h.row_list()) s += r.str() + '\n';
  return s;
}

BitMatrix from_dense(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::string t;
    for (char c : line)
      if (c == '0' || c == '1') t += c;
      else if (!std::isspace(static_cast<unsigned char>(c))) throw ValidationError("dense matrix: unexpected character");
    if (!t.empty()) rows.push_back(t);
  }
  try {
    return BitMatrix::from_strings(rows);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

Bipartition bipartition_from_text(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  Bipartition a(n);
  std::size_t i = 0;
  std::string tok;
  while (in >> tok) {
    if (tok != "0" && tok != "1") throw ValidationError("bipartition entries must be 0 or 1");
    if (i >= n) throw ValidationError("bipartition longer than the code");
    if (tok == "1") a.set(i);
    ++i;
  }
  if (i != n) throw ValidationError("bipartition has " + std::to_string(i) + " entries, code has " + std::to_string(n));
  return a;
}

std::vector<Family> families_from_json(const std::string& text) {
  std::vector<Family> out;
  try {
    for (auto& f : json::parse(text)) {
      Family fam;
      std::string side = f.at("side").get<std::string>();
      if (side != "X" && side != "Z") throw ValidationError("family side must be X or Z");
      fam.side = side[0];
      std::string kind = f.value("kind", std::string("maximal"));
      if (kind == "maximal") fam.kind = SubgraphKind::maximal;
      else if (kind == "rainbow") fam.kind = SubgraphKind::rainbow;
      else throw ValidationError("family kind must be maximal or rainbow");
      fam.colours = 0;
      for (auto& c : f.at("colours")) {
        if (c.is_number_integer()) fam.colours |= colour_bit(c.get<int>());
        else fam.colours |= parse_colours(c.get<std::string>());
      }
      out.push_back(fam);
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("family spec: ") + e.what());
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace rainbow

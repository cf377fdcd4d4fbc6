#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rainbow/code.hpp"
#include "rainbow/contraction.hpp"
#include "rainbow/distance.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/io.hpp"
#include "rainbow/triorth.hpp"

using namespace rainbow;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
enum Exit { ok = 0, failure = 1, invalid = 2, over_budget = 3 };

const std::set<std::string> kTasks = {"params", "distance", "triorth", "logicals", "contract", "export"};

struct Opts {
  std::string factors;
  std::string cls = "generic";
  int x = 0, z = 0;
  std::string tasks = "params";
  std::size_t wmax = 0;
  std::size_t iters = 0;
  std::uint64_t seed = 1;
  std::string side = "both";
  std::string bipartition;
  std::string colours;
  std::string families;
  std::string out;
  std::string export_dir = ".";
  std::uint64_t budget = kDefaultBudget;
  std::string alist_x, alist_z;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, ','))
    if (!t.empty()) out.push_back(t);
  return out;
}

std::set<std::string> parse_tasks(const std::string& s) {
  std::set<std::string> t;
  for (auto& x : split(s)) {
    if (!kTasks.count(x)) throw ValidationError("unknown task '" + x + "'");
    t.insert(x);
  }
  if (t.empty()) throw ValidationError("no tasks given");
  return t;
}

std::vector<LevelledGraph> load_factors(const std::string& s) {
  std::vector<LevelledGraph> f;
  for (auto& src : split_factor_list(s)) f.push_back(load_factor(src));
  if (f.empty()) throw ValidationError("need at least one factor");
  return f;
}

json opt_int(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json distance_json(CssCode& code, const Opts& o, bool run) {
  json j;
  j["d_upper"] = nullptr;
  j["d_exact_upto"] = nullptr;
  if (!run) return j;
  Side side = parse_side(o.side);
  std::optional<DistanceReport> ex, is;
  if (o.wmax > 0) ex = exact_distance_upto(code, side, o.wmax, o.budget);
  if (o.iters > 0) {
    if (side == Side::both)
      is = combine_sides(isd_upper_bound(code, Side::X, o.iters, o.seed), isd_upper_bound(code, Side::Z, o.iters, o.seed));
    else
      is = isd_upper_bound(code, side, o.iters, o.seed);
  }
  DistanceReport r;
  if (ex && is) r = with_witness(*ex, *is);
  else if (ex) r = *ex;
  else if (is) r = *is;
  if (r.best) {
    j["d_upper"] = r.best->weight;
    j["witness"] = {{"side", std::string(1, r.best->side)}, {"support", r.best->support.support()}};
  }
  j["d_exact_upto"] = opt_int(r.exact_floor);
  j["d_certified"] = opt_int(r.certified());
  j["side"] = side_name(side);
  j["wmax"] = o.wmax;
  j["isd_iterations"] = o.iters;
  return j;
}

json params_json(const CssCode& c) {
  json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["rank_x"] = c.rank_x;
  j["rank_z"] = c.rank_z;
  j["rows_x"] = c.hx.rows();
  j["rows_z"] = c.hz.rows();
  j["generator_weight_max"] = {{"x", c.hx.max_row_weight()}, {"z", c.hz.max_row_weight()}};
  return j;
}

void export_code(const CssCode& c, const std::string& dir, const std::string& stem) {
  std::filesystem::create_directories(dir);
  auto p = [&](const std::string& f) { return (std::filesystem::path(dir) / (stem + f)).string(); };
  write_file(p("hx.alist"), to_alist(c.hx));
  write_file(p("hz.alist"), to_alist(c.hz));
  write_file(p("hx.txt"), to_dense(c.hx));
  write_file(p("hz.txt"), to_dense(c.hz));
}

void export_graph(const SimplexGraph& g, const std::vector<Family>& fams, const std::string& dir) {
  std::filesystem::create_directories(dir);
  write_file((std::filesystem::path(dir) / "simplex.json").string(), simplex_graph_json(g) + "\n");
  std::string lines;
  for (auto& f : fams) {
    if (f.kind == SubgraphKind::maximal) {
      for (auto& s : maximal_subgraphs(g, f.colours)) lines += std::string(1, f.side) + " " + subgraph_json_line(s) + "\n";
    } else if (colour_count(f.colours) == 2) {
      auto cl = colour_list(f.colours);
      for (auto& s : rainbow_two(g, cl[0], cl[1])) lines += std::string(1, f.side) + " " + subgraph_json_line(s) + "\n";
    }
  }
  write_file((std::filesystem::path(dir) / "subgraphs.jsonl").string(), lines);
}

json triorth_json(CssCode& code, const SimplexGraph& g, const std::vector<LevelledGraph>& factors, const Opts& o) {
  json j;
  Bipartition a = o.bipartition.empty() ? orientation_bipartition(factors)
                                        : bipartition_from_text(read_file(o.bipartition), code.n);
  j["bipartition"] = o.bipartition.empty() ? "orientation" : o.bipartition;
  TriorthReport r = check_triorthogonality(code, a);
  json conds = json::array();
  for (int i = 0; i < 5; ++i)
    conds.push_back({{"condition", i + 1}, {"pass", r.cond[i].pass}, {"counterexample", r.cond[i].counterexample}});
  j["conditions"] = conds;
  j["gate_found"] = r.gate_found;
  if (r.gate_found) {
    std::vector<int> order;
    for (int c = 0; c < g.colours(); ++c) order.push_back(c);
    auto colour = colour_logical_basis(code, g, order, 64, o.seed);
    auto triples = ccz_interactions(code, r);
    std::vector<int> deg(code.k, 0);
    json t = json::array();
    for (auto [p, q, s] : triples) {
      ++deg[p], ++deg[q], ++deg[s];
      t.push_back({p, q, s});
    }
    j["logical_colour"] = colour;
    j["ccz_triples"] = t;
    j["ccz_degree"] = deg;
  }
  return j;
}

json logicals_json(CssCode& code) {
  compute_logicals(code);
  json j;
  json wx = json::array(), wz = json::array();
  for (auto& r : code.lx.row_list()) wx.push_back(r.weight());
  for (auto& r : code.lz.row_list()) wz.push_back(r.weight());
  j["x_weights"] = wx;
  j["z_weights"] = wz;
  return j;
}

void emit(const json& j, const Opts& o) {
  std::string s = j.dump(2) + "\n";
  if (o.out.empty())
    std::cout << s;
  else
    write_file(o.out, s);
}

json spec_json(const std::string& cmd, const Opts& o) {
  json s;
  s["command"] = cmd;
  if (!o.factors.empty()) s["factors"] = split_factor_list(o.factors);
  if (cmd == "build" || cmd == "contract") {
    s["class"] = o.cls;
    s["x"] = o.x;
    s["z"] = o.z;
  }
  s["tasks"] = o.tasks;
  s["wmax"] = o.wmax;
  s["iters"] = o.iters;
  s["side"] = o.side;
  s["budget"] = o.budget;
  if (!o.colours.empty()) s["colours"] = o.colours;
  if (!o.families.empty()) s["families"] = o.families;
  if (!o.bipartition.empty()) s["bipartition"] = o.bipartition;
  return s;
}

json header(const std::string& cmd, const Opts& o) {
  json j;
  j["tool"] = "rainbow";
  j["version"] = kVersion;
  j["spec"] = spec_json(cmd, o);
  j["seeds"] = {o.seed};
  return j;
}

Assignment assignment_of(const Opts& o, int D) {
  Assignment a;
  a.cls = parse_class(o.cls);
  a.x = o.x ? o.x : D;
  a.z = o.z ? o.z : 2;
  return a;
}

json assignment_json(const Assignment& a) { return {{"class", class_name(a.cls)}, {"x", a.x}, {"z", a.z}}; }

std::vector<int> parse_colour_list(const std::string& s) {
  std::vector<int> out;
  for (auto c : colour_list(parse_colours(s))) out.push_back(c);
  if (out.empty()) throw ValidationError("no colours to contract");
  return out;
}

json contract_json(const SimplexGraph& g, const Opts& o, const std::set<std::string>& tasks) {
  auto cols = parse_colour_list(o.colours);
  ContractedGraph cg = contract(g, cols);
  auto fams = o.families.empty() ? default_contracted_families(g.dim(), cg.removed)
                                 : families_from_json(read_file(o.families));
  CssCode c = contracted_code(cg, fams);
  json j;
  j["colours"] = colour_string(cg.removed);
  json fj = json::array();
  for (auto& f : fams) fj.push_back({{"side", std::string(1, f.side)}, {"colours", colour_string(f.colours)}, {"kind", kind_name(f.kind)}});
  j["families"] = fj;
  json p = params_json(c);
  for (auto& [k, v] : p.items()) j[k] = v;
  json d = distance_json(c, o, tasks.count("distance") > 0);
  for (auto& [k, v] : d.items()) j[k] = v;
  if (tasks.count("export")) export_code(c, o.export_dir, "contracted_");
  return j;
}

int run_build(const Opts& o) {
  auto tasks = parse_tasks(o.tasks);
  auto factors = load_factors(o.factors);
  SimplexGraph g = simplex_graph_of(factors);
  Assignment a = assignment_of(o, g.dim());
  auto fams = families_for(a, g.dim());
  CssCode code = assemble(g, a);
  json j = header("build", o);
  j["n"] = code.n;
  j["k"] = code.k;
  j["assignment"] = assignment_json(a);
  json p = params_json(code);
  j["generator_weight_max"] = p["generator_weight_max"];
  if (tasks.count("params")) {
    j["rank_x"] = code.rank_x;
    j["rank_z"] = code.rank_z;
    j["rows_x"] = code.hx.rows();
    j["rows_z"] = code.hz.rows();
    std::vector<int> cr;
    for (auto& f : factors) cr.push_back(circuit_rank(f));
    j["circuit_ranks"] = cr;
    if (a.cls != CodeClass::pin) j["predicted_k"] = predicted_k(a, cr, g.dim());
  }
  json d = distance_json(code, o, tasks.count("distance") > 0);
  for (auto& [k, v] : d.items()) j[k] = v;
  if (tasks.count("logicals")) j["logicals"] = logicals_json(code);
  if (tasks.count("triorth")) j["triorth"] = triorth_json(code, g, factors, o);
  if (tasks.count("contract")) {
    if (o.colours.empty()) throw ValidationError("contract task needs --colours");
    j["contracted"] = contract_json(g, o, tasks);
  }
  if (tasks.count("export")) {
    export_code(code, o.export_dir, "");
    export_graph(g, fams, o.export_dir);
  }
  emit(j, o);
  return ok;
}

int run_contract(const Opts& o) {
  auto tasks = parse_tasks(o.tasks);
  if (o.colours.empty()) throw ValidationError("contract needs --colours");
  auto factors = load_factors(o.factors);
  SimplexGraph g = simplex_graph_of(factors);
  json j = header("contract", o);
  json c = contract_json(g, o, tasks);
  for (auto& [k, v] : c.items()) j[k] = v;
  emit(j, o);
  return ok;
}

BitMatrix load_matrix(const std::string& path) {
  std::string text = read_file(path);
  auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".alist") return from_alist(text);
  return from_dense(text);
}

int run_distance(const Opts& o) {
  CssCode code;
  json j = header("distance", o);
  if (!o.factors.empty()) {
    auto factors = load_factors(o.factors);
    SimplexGraph g = simplex_graph_of(factors);
    Assignment a = assignment_of(o, g.dim());
    code = assemble(g, a);
    j["assignment"] = assignment_json(a);
  } else {
    if (o.alist_x.empty() || o.alist_z.empty()) throw ValidationError("distance needs --factors or both --hx and --hz");
    code = make_css(load_matrix(o.alist_x), load_matrix(o.alist_z));
  }
  j["n"] = code.n;
  j["k"] = code.k;
  if (o.wmax == 0 && o.iters == 0) throw ValidationError("distance needs --wmax and/or --iters");
  json d = distance_json(code, o, true);
  for (auto& [k, v] : d.items()) j[k] = v;
  emit(j, o);
  return ok;
}

int run_inspect(const Opts& o) {
  auto factors = load_factors(o.factors);
  json j = header("inspect", o);
  json fj = json::array();
  for (auto& f : factors) {
    auto g = girth(f);
    int deg = 0;
    bool reg = is_regular(f, &deg);
    fj.push_back({{"vertices", f.size()},
                  {"edges", f.edges.size()},
                  {"components", connected_components(f)},
                  {"circuit_rank", circuit_rank(f)},
                  {"girth", g ? json(*g) : json(nullptr)},
                  {"regular", reg ? json(deg) : json(nullptr)},
                  {"even_degree", is_all_even_degree(f)}});
  }
  j["factors"] = fj;
  SimplexGraph g = simplex_graph_of(factors);
  j["flags"] = g.size();
  try {
    j["predicted_flags"] = predicted_flag_count(factors);
  } catch (const std::exception&) {
    j["predicted_flags"] = nullptr;
  }
  json cl = json::object();
  for (int c = 0; c < g.colours(); ++c) {
    json m = json::object();
    for (auto [sz, cnt] : clique_census(g, c)) m[std::to_string(sz)] = cnt;
    cl["c" + std::to_string(c)] = m;
  }
  j["clique_sizes"] = cl;
  json ct = json::object();
  for (int c = 0; c < g.colours(); ++c) ct["c" + std::to_string(c)] = contractibility_check(g, c).pass;
  j["contractible"] = ct;
  emit(j, o);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow: colour, pin and rainbow CSS codes from graph products"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Opts o;

  auto common = [&](CLI::App* s, bool assignment) {
    s->add_option("--factors", o.factors, "comma list: cycle:N, fig8, kbip:a,b, path:N or graph JSON files");
    if (assignment) {
      s->add_option("--class", o.cls, "pin, generic, anti_generic or mixed");
      s->add_option("--x", o.x, "X subgraph size (default D)");
      s->add_option("--z", o.z, "Z subgraph size (default 2)");
    }
    s->add_option("--wmax", o.wmax, "exhaustive search up to this weight");
    s->add_option("--iters", o.iters, "information-set iterations");
    s->add_option("--seed", o.seed, "seed for randomised searches");
    s->add_option("--side", o.side, "x, z or both")->check(CLI::IsMember({"x", "z", "both", "X", "Z"}));
    s->add_option("--budget", o.budget, "max candidates for exhaustive search");
    s->add_option("--out", o.out, "report path (default stdout)");
  };

  auto* build = app.add_subcommand("build", "build a code and run tasks");
  common(build, true);
  build->add_option("--tasks", o.tasks, "params,distance,triorth,logicals,contract,export");
  build->add_option("--bipartition", o.bipartition, "file with one 0/1 per qubit (1 = T)");
  build->add_option("--colours", o.colours, "colours to contract, e.g. c0,c3");
  build->add_option("--families", o.families, "contracted family spec JSON");
  build->add_option("--export-dir", o.export_dir, "directory for exported files");

  auto* con = app.add_subcommand("contract", "contract edge colours and build the contracted code");
  common(con, false);
  con->add_option("--colours", o.colours, "colours to contract, e.g. c0,c3")->required();
  con->add_option("--families", o.families, "family spec JSON (default: colour-code families)");
  con->add_option("--tasks", o.tasks, "params,distance,export");
  con->add_option("--export-dir", o.export_dir, "directory for exported files");

  auto* dist = app.add_subcommand("distance", "distance bounds for a built or loaded code");
  common(dist, true);
  dist->add_option("--hx", o.alist_x, "X checks (.alist or dense text)");
  dist->add_option("--hz", o.alist_z, "Z checks (.alist or dense text)");

  auto* insp = app.add_subcommand("inspect", "factor and simplex graph statistics");
  insp->add_option("--factors", o.factors, "factor list")->required();
  insp->add_option("--out", o.out, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return invalid;
  }

  try {
    if (*build) return run_build(o);
    if (*con) return run_contract(o);
    if (*dist) return run_distance(o);
    if (*insp) return run_inspect(o);
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return invalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return invalid;
  } catch (const BudgetError& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return over_budget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return failure;
  }
  return failure;
}

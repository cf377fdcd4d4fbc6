#pragma once

#include <string>
#include <vector>

#include "rainbow/code.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/triorth.hpp"

namespace rainbow {

// {"vertices":[{"id":..,"level":0|1}],"edges":[[a,b]]}; ids may be sparse
LevelledGraph graph_from_json(const std::string& text);
std::string graph_to_json(const LevelledGraph& g);
// generator shorthand or a path to a graph JSON file
LevelledGraph load_factor(const std::string& source);
// splits "cycle:4,fig8,kbip:4,4" at commas that start a new factor
std::vector<std::string> split_factor_list(const std::string& s);

std::string simplex_graph_json(const SimplexGraph& g);
std::string subgraph_json_line(const Subgraph& s);

// MacKay alist: "n m", max degrees, column then row degrees, 1-based lists
std::string to_alist(const BitMatrix& h);
BitMatrix from_alist(const std::string& text);
std::string to_dense(const BitMatrix& h);
BitMatrix from_dense(const std::string& text);

Bipartition bipartition_from_text(const std::string& text, std::size_t n);
// [{"side":"X","colours":["c0","c1"] or [0,1],"kind":"maximal|rainbow"}]
std::vector<Family> families_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rainbow

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "eulerclass/multigraph.hpp"

namespace eulerclass {

// Text format: "v N" then one "e U V" line per edge, in edge order. Blank
// lines and lines starting with '#' are skipped.
Multigraph parse_graph(std::string_view text);
Multigraph read_graph_file(const std::filesystem::path& path);

// Inverse of parse_graph; `comment` becomes a leading '#' line when nonempty.
std::string format_graph(const Multigraph& g, std::string_view comment = {});

// "3,1,2" -> 0-based ids {2,0,1}. Every id must lie in 1..edge_count.
std::vector<EdgeId> parse_edge_ids(std::string_view text, int edge_count);
EdgeSet parse_edge_set(std::string_view text, int edge_count);

}  // namespace eulerclass

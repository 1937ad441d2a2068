#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netmend/graph.hpp"

namespace netmend {

struct EdgeListLoadResult {
    Graph graph;
    /// Original label of each dense node id, in first-seen order.
    std::vector<std::string> labels;
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

/// Reads a whitespace-separated `u v` edge list. Labels are arbitrary tokens
/// and get remapped to dense ids; `#` comment lines and blank lines are
/// skipped. Duplicate edges (in either orientation) and self-loops are
/// dropped and counted. Throws IoError if the file cannot be opened and
/// ParseError (with line number) on malformed lines.
EdgeListLoadResult load_edge_list(const std::string& path);

/// Writes `u v` lines using dense ids, one edge per line in sorted order,
/// LF-terminated. Reloading gives the same graph up to label mapping.
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace netmend

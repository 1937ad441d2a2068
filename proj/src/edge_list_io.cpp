#include "netmend/edge_list_io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "netmend/errors.hpp"

namespace netmend {

EdgeListLoadResult load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list: " + path);

    std::unordered_map<std::string, NodeId> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> raw_edges;
    auto intern = [&](const std::string& label) {
        const auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    std::size_t self_loops = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string a, b, extra;
        if (!(row >> a)) continue;  // blank
        if (a.front() == '#') continue;
        if (!(row >> b)) throw ParseError("expected two labels, got one", line_no);
        if (row >> extra) throw ParseError("expected two labels, got more", line_no);
        if (a == b) {
            ++self_loops;
            intern(a);
            continue;
        }
        const NodeId u = intern(a);  // sequenced: first-seen label order
        const NodeId v = intern(b);
        raw_edges.emplace_back(u, v);
    }

    EdgeListLoadResult result;
    result.labels = std::move(labels);
    result.self_loops = self_loops;
    result.graph = Graph(result.labels.size());
    for (const auto& [u, v] : raw_edges) {
        if (!result.graph.add_edge(u, v)) ++result.duplicate_edges;
    }
    return result;
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF on every platform
    if (!out) throw IoError("cannot write edge list: " + path);
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    if (!out) throw IoError("failed while writing edge list: " + path);
}

}  // namespace netmend

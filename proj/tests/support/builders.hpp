#pragma once

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

#include "netmend/graph.hpp"
#include "netmend/trust.hpp"

namespace netmend::test {

inline Graph path_graph(std::size_t n) {
    Graph g(n);
    for (NodeId v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(0, static_cast<NodeId>(n - 1));
    return g;
}

inline Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Star with `leaves` leaves around center 0.
inline Graph star_graph(std::size_t leaves) {
    Graph g(leaves + 1);
    for (NodeId v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Graph graph_from_edges(std::size_t n,
                              std::initializer_list<std::pair<NodeId, NodeId>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

/// Trust profile assigning the same value to every node.
inline TrustProfile uniform_trust(std::size_t n, double value = 0.5) {
    TrustProfile profile;
    profile.successes.assign(n, 0);
    profile.failures.assign(n, 0);
    profile.trust.assign(n, value);
    return profile;
}

/// Unique scratch directory, removed on destruction.
class TempDir {
  public:
    TempDir() {
        static std::atomic<unsigned> counter{0};
        const auto base = std::filesystem::temp_directory_path();
        path_ = base / ("netmend_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

}  // namespace netmend::test

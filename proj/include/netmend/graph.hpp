#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace netmend {

using NodeId = std::uint32_t;

/// Undirected edge, stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order. Throws std::invalid_argument on a self-loop.
Edge make_edge(NodeId a, NodeId b);

/// Simple undirected graph over dense node ids 0..n-1.
///
/// No self-loops, no parallel edges. An optional non-negative weight can be
/// attached to each existing edge; weights are cost metadata and never enter
/// the Laplacian, which is built from the unweighted structure only.
class Graph {
  public:
    Graph() = default;
    explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_edge(NodeId a, NodeId b) const;

    /// Inserts edge {a,b}. Returns false (and leaves the graph unchanged) if
    /// the edge already exists. Throws std::invalid_argument on self-loops or
    /// endpoints >= node_count().
    bool add_edge(NodeId a, NodeId b);

    /// Removes edge {a,b} and any weight attached to it. Returns false if the
    /// edge does not exist.
    bool remove_edge(NodeId a, NodeId b);

    std::size_t degree(NodeId v) const;

    /// Neighbor sets are ordered, so iteration order is deterministic.
    const std::set<NodeId>& neighbors(NodeId v) const;

    /// All edges in lexicographic (u,v) order with u < v.
    std::vector<Edge> edges() const;

    std::vector<std::size_t> degrees() const;

    /// Attaches a non-negative weight to an existing edge.
    void set_weight(NodeId a, NodeId b, double w);
    std::optional<double> weight(NodeId a, NodeId b) const;

    /// Subgraph induced by `nodes`, relabeled to 0..nodes.size()-1 in the
    /// given order. Edge weights are carried over.
    Graph induced_subgraph(std::span<const NodeId> nodes) const;

  private:
    void check_node(NodeId v) const;

    std::vector<std::set<NodeId>> adjacency_;
    std::map<Edge, double> weights_;
    std::size_t edge_count_ = 0;
};

/// Connected components, largest first. Ties are ordered by the smallest
/// contained node id; the node list of each component is sorted ascending.
struct ComponentPartition {
    std::vector<std::vector<NodeId>> sets;

    std::size_t count() const { return sets.size(); }
    const std::vector<NodeId>& lcc() const { return sets.front(); }
};

ComponentPartition components(const Graph& g);

/// True when removing edge {a,b} would disconnect a from b. Throws
/// std::invalid_argument if the edge is absent.
bool is_bridge(const Graph& g, NodeId a, NodeId b);

/// Laplacian energy in closed form from the edge count and degree sequence:
/// (1/n) [2m + sum k_i^2 - 4 m^2 / n]. O(n + m), no eigendecomposition.
/// Throws std::domain_error on an empty node set.
double laplacian_energy_fast(const Graph& g);

/// Laplacian energy as the variance of the eigenvalues of L = D - A.
/// Serves as the spectral cross-check for laplacian_energy_fast.
/// Throws std::domain_error on an empty node set, std::runtime_error if the
/// eigensolver does not converge.
double laplacian_energy_spectral(const Graph& g);

/// Fraction of nodes in the largest connected component.
double robustness_index(const Graph& g);

/// 2m / (n (n-1)). Throws std::domain_error for n < 2.
double density(const Graph& g);

/// Whole-graph robustness summary. Laplacian energy is measured on the
/// induced LCC subgraph; robustness and density on the full graph.
struct MetricsSnapshot {
    double laplacian_energy = 0.0;
    double robustness = 0.0;
    double density = 0.0;
    std::size_t lcc_nodes = 0;
    std::size_t lcc_edges = 0;
};

MetricsSnapshot measure(const Graph& g);

}  // namespace netmend

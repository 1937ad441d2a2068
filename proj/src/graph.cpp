#include "netmend/graph.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace netmend {

Edge make_edge(NodeId a, NodeId b) {
    if (a == b) throw std::invalid_argument("self-loop on node " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

void Graph::check_node(NodeId v) const {
    if (v >= adjacency_.size())
        throw std::invalid_argument("node " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(adjacency_.size()) + ")");
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    if (a == b) return false;
    return adjacency_[a].count(b) > 0;
}

bool Graph::add_edge(NodeId a, NodeId b) {
    check_node(a);
    check_node(b);
    make_edge(a, b);  // rejects self-loops
    if (adjacency_[a].count(b)) return false;
    adjacency_[a].insert(b);
    adjacency_[b].insert(a);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(NodeId a, NodeId b) {
    check_node(a);
    check_node(b);
    if (a == b) return false;
    if (!adjacency_[a].count(b)) return false;
    adjacency_[a].erase(b);
    adjacency_[b].erase(a);
    weights_.erase(make_edge(a, b));
    --edge_count_;
    return true;
}

std::size_t Graph::degree(NodeId v) const {
    check_node(v);
    return adjacency_[v].size();
}

const std::set<NodeId>& Graph::neighbors(NodeId v) const {
    check_node(v);
    return adjacency_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u)
        for (NodeId v : adjacency_[u])
            if (u < v) out.push_back(Edge{u, v});
    return out;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out(adjacency_.size());
    for (std::size_t v = 0; v < adjacency_.size(); ++v) out[v] = adjacency_[v].size();
    return out;
}

void Graph::set_weight(NodeId a, NodeId b, double w) {
    if (!has_edge(a, b))
        throw std::invalid_argument("no edge {" + std::to_string(a) + "," + std::to_string(b) +
                                    "} to weigh");
    if (w < 0.0) throw std::invalid_argument("edge weight must be non-negative");
    weights_[make_edge(a, b)] = w;
}

std::optional<double> Graph::weight(NodeId a, NodeId b) const {
    if (!has_edge(a, b)) return std::nullopt;
    const auto it = weights_.find(make_edge(a, b));
    if (it == weights_.end()) return std::nullopt;
    return it->second;
}

Graph Graph::induced_subgraph(std::span<const NodeId> nodes) const {
    std::vector<NodeId> remap(adjacency_.size(), static_cast<NodeId>(adjacency_.size()));
    Graph sub(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        check_node(nodes[i]);
        remap[nodes[i]] = static_cast<NodeId>(i);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (NodeId w : adjacency_[nodes[i]]) {
            if (remap[w] >= sub.node_count()) continue;  // outside the induced set
            if (nodes[i] < w) {
                sub.add_edge(static_cast<NodeId>(i), remap[w]);
                const auto it = weights_.find(Edge{nodes[i], w});
                if (it != weights_.end())
                    sub.set_weight(static_cast<NodeId>(i), remap[w], it->second);
            }
        }
    }
    return sub;
}

ComponentPartition components(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<bool> seen(n, false);
    ComponentPartition parts;
    std::queue<NodeId> frontier;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<NodeId> comp;
        seen[s] = true;
        frontier.push(s);
        while (!frontier.empty()) {
            const NodeId u = frontier.front();
            frontier.pop();
            comp.push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    frontier.push(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        parts.sets.push_back(std::move(comp));
    }
    std::stable_sort(parts.sets.begin(), parts.sets.end(),
                     [](const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a.front() < b.front();
                     });
    return parts;
}

bool is_bridge(const Graph& g, NodeId a, NodeId b) {
    if (!g.has_edge(a, b))
        throw std::invalid_argument("no edge {" + std::to_string(a) + "," + std::to_string(b) +
                                    "} to test");
    std::vector<bool> seen(g.node_count(), false);
    std::queue<NodeId> frontier;
    seen[a] = true;
    frontier.push(a);
    while (!frontier.empty()) {
        const NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : g.neighbors(u)) {
            if (u == a && v == b) continue;  // pretend {a,b} is gone
            if (v == b) return false;
            if (!seen[v]) {
                seen[v] = true;
                frontier.push(v);
            }
        }
    }
    return true;
}

double laplacian_energy_fast(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::domain_error("Laplacian energy undefined for an empty node set");
    const double m = static_cast<double>(g.edge_count());
    double degree_sq_sum = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        const double k = static_cast<double>(g.degree(static_cast<NodeId>(v)));
        degree_sq_sum += k * k;
    }
    const double nd = static_cast<double>(n);
    return (2.0 * m + degree_sq_sum - 4.0 * m * m / nd) / nd;
}

double laplacian_energy_spectral(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::domain_error("Laplacian energy undefined for an empty node set");
    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n));
    for (const Edge& e : g.edges()) {
        laplacian(e.u, e.u) += 1.0;
        laplacian(e.v, e.v) += 1.0;
        laplacian(e.u, e.v) -= 1.0;
        laplacian(e.v, e.u) -= 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("Laplacian eigensolver did not converge");
    const Eigen::VectorXd& lambda = solver.eigenvalues();
    const double mean = lambda.mean();
    return (lambda.array() - mean).square().sum() / static_cast<double>(n);
}

double robustness_index(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::domain_error("robustness index undefined for an empty node set");
    return static_cast<double>(components(g).lcc().size()) / static_cast<double>(n);
}

double density(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n < 2) throw std::domain_error("density undefined for n < 2");
    const double nd = static_cast<double>(n);
    return 2.0 * static_cast<double>(g.edge_count()) / (nd * (nd - 1.0));
}

MetricsSnapshot measure(const Graph& g) {
    const ComponentPartition parts = components(g);
    const Graph lcc = g.induced_subgraph(parts.lcc());
    MetricsSnapshot snap;
    snap.laplacian_energy = laplacian_energy_fast(lcc);
    snap.robustness = static_cast<double>(lcc.node_count()) / static_cast<double>(g.node_count());
    snap.density = density(g);
    snap.lcc_nodes = lcc.node_count();
    snap.lcc_edges = lcc.edge_count();
    return snap;
}

}  // namespace netmend

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "netmend/graph.hpp"

namespace netmend {

/// Symmetric per-pair transaction tallies. Entries exist only for edges;
/// lookups elsewhere (including the diagonal) return zero.
struct TransactionMatrices {
    std::size_t node_count = 0;
    std::map<Edge, std::pair<std::uint64_t, std::uint64_t>> tallies;  // {successes, failures}

    std::uint64_t successes(NodeId i, NodeId j) const;
    std::uint64_t failures(NodeId i, NodeId j) const;
};

/// Per-node transaction totals and the resulting trust values.
struct TrustProfile {
    std::vector<std::uint64_t> successes;  // row sums of the success matrix
    std::vector<std::uint64_t> failures;
    std::vector<double> trust;  // in [0,1]

    std::size_t node_count() const { return trust.size(); }
};

/// Maximum-likelihood trust value: successes / (successes + failures).
/// Throws UndefinedTrustError when the node has no transactions at all.
double trust_mle(std::uint64_t successes, std::uint64_t failures);

/// Trust affinity of a node pair: the cosine-similarity factor of the trust
/// gap, scaled by the product of the trust values. Always in [0,1].
/// The gap is treated as radians; both inputs must lie in [0,1].
double trust_scale(double trust_i, double trust_j);

/// Edge weight (equivalently, creation cost) of a node pair:
/// trust_scale + adjacency. adjacency must be 0 or 1.
double edge_weight(double trust_i, double trust_j, int adjacency);

/// Builds per-node totals from the tally matrices. Nodes without any
/// transactions get the uninformative default trust 0.5, so isolated nodes
/// can still acquire priced edges during restoration.
TrustProfile trust_profile(const TransactionMatrices& tallies);

/// Draws per-edge success/failure counts uniformly from [lo, hi], redrawing
/// any pair that lands on (0,0). Deterministic under seed. Requires hi >= lo
/// and hi >= 1; violations raise ConfigError.
TransactionMatrices generate_transactions(const Graph& g, std::uint64_t seed, std::uint64_t lo,
                                          std::uint64_t hi);

/// Copy of g with every edge weighted by the endpoint trust values. The
/// profile must cover all nodes.
Graph weigh_graph(const Graph& g, const TrustProfile& profile);

/// Reads `i,j,successes,failures` CSV rows, symmetrizing on load: both
/// orientations address the same unordered pair, and the last row for a pair
/// wins. `#` comments are skipped.
TransactionMatrices load_transactions_csv(const std::string& path, std::size_t node_count);

}  // namespace netmend

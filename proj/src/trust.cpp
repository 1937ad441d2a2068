#include "netmend/trust.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "netmend/errors.hpp"
#include "netmend/rng.hpp"

namespace netmend {

std::uint64_t TransactionMatrices::successes(NodeId i, NodeId j) const {
    if (i == j) return 0;
    const auto it = tallies.find(make_edge(i, j));
    return it == tallies.end() ? 0 : it->second.first;
}

std::uint64_t TransactionMatrices::failures(NodeId i, NodeId j) const {
    if (i == j) return 0;
    const auto it = tallies.find(make_edge(i, j));
    return it == tallies.end() ? 0 : it->second.second;
}

double trust_mle(std::uint64_t successes, std::uint64_t failures) {
    if (successes + failures == 0)
        throw UndefinedTrustError("trust undefined without any transactions");
    return static_cast<double>(successes) / static_cast<double>(successes + failures);
}

double trust_scale(double trust_i, double trust_j) {
    if (trust_i < 0.0 || trust_i > 1.0 || trust_j < 0.0 || trust_j > 1.0)
        throw std::domain_error("trust values must lie in [0,1]");
    const double gap = std::abs(trust_i - trust_j);
    return (std::cos(gap) + 1.0) / 2.0 * (trust_i * trust_j);
}

double edge_weight(double trust_i, double trust_j, int adjacency) {
    if (adjacency != 0 && adjacency != 1)
        throw std::domain_error("adjacency indicator must be 0 or 1");
    return trust_scale(trust_i, trust_j) + static_cast<double>(adjacency);
}

TrustProfile trust_profile(const TransactionMatrices& tallies) {
    TrustProfile profile;
    profile.successes.assign(tallies.node_count, 0);
    profile.failures.assign(tallies.node_count, 0);
    for (const auto& [edge, counts] : tallies.tallies) {
        profile.successes[edge.u] += counts.first;
        profile.successes[edge.v] += counts.first;
        profile.failures[edge.u] += counts.second;
        profile.failures[edge.v] += counts.second;
    }
    profile.trust.resize(tallies.node_count);
    for (std::size_t i = 0; i < tallies.node_count; ++i) {
        const std::uint64_t total = profile.successes[i] + profile.failures[i];
        profile.trust[i] = total == 0 ? 0.5 : trust_mle(profile.successes[i], profile.failures[i]);
    }
    return profile;
}

TransactionMatrices generate_transactions(const Graph& g, std::uint64_t seed, std::uint64_t lo,
                                          std::uint64_t hi) {
    if (hi < lo || hi < 1)
        throw ConfigError("transaction range [" + std::to_string(lo) + "," + std::to_string(hi) +
                          "] is invalid; need hi >= lo and hi >= 1");
    Rng rng = make_rng(seed, stream::transactions);
    TransactionMatrices out;
    out.node_count = g.node_count();
    for (const Edge& e : g.edges()) {
        std::uint64_t succ = 0;
        std::uint64_t fail = 0;
        do {
            succ = uniform_int(rng, lo, hi);
            fail = uniform_int(rng, lo, hi);
        } while (succ + fail == 0);
        out.tallies[e] = {succ, fail};
    }
    return out;
}

Graph weigh_graph(const Graph& g, const TrustProfile& profile) {
    if (profile.node_count() < g.node_count())
        throw UndefinedTrustError("trust profile covers " + std::to_string(profile.node_count()) +
                                  " of " + std::to_string(g.node_count()) + " nodes");
    Graph weighted = g;
    for (const Edge& e : g.edges())
        weighted.set_weight(e.u, e.v, edge_weight(profile.trust[e.u], profile.trust[e.v], 1));
    return weighted;
}

TransactionMatrices load_transactions_csv(const std::string& path, std::size_t node_count) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open transaction file: " + path);
    TransactionMatrices out;
    out.node_count = node_count;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream row(line);
        std::string field;
        std::uint64_t values[4];
        for (int k = 0; k < 4; ++k) {
            if (!std::getline(row, field, ','))
                throw ParseError("expected i,j,successes,failures", line_no);
            try {
                values[k] = std::stoull(field);
            } catch (const std::exception&) {
                throw ParseError("non-numeric field '" + field + "'", line_no);
            }
        }
        if (std::getline(row, field, ','))
            throw ParseError("trailing fields after i,j,successes,failures", line_no);
        if (values[0] == values[1]) throw ParseError("transaction on the diagonal", line_no);
        if (values[0] >= node_count || values[1] >= node_count)
            throw ParseError("node id out of range", line_no);
        out.tallies[make_edge(static_cast<NodeId>(values[0]), static_cast<NodeId>(values[1]))] = {
            values[2], values[3]};
    }
    return out;
}

}  // namespace netmend

#pragma once

#include <cstdint>
#include <string>

#include "netmend/graph.hpp"

namespace netmend {

/// Parameters for one synthetic network. Exactly the fields of the chosen
/// kind are meaningful.
struct GeneratorSpec {
    enum class Kind { ErdosRenyi, PowerLaw };

    Kind kind = Kind::ErdosRenyi;
    std::size_t node_count = 0;
    double edge_probability = 0.0;  // ER only
    double exponent = 0.0;          // power law only, > 2
    std::uint64_t seed = 0;

    /// Throws ConfigError on out-of-range parameters.
    void validate() const;
};

/// G(n, p): every unordered pair becomes an edge independently with
/// probability p. Deterministic under seed.
Graph generate_erdos_renyi(std::size_t node_count, double edge_probability, std::uint64_t seed);

/// Configuration-model graph with degrees sampled from p(k) proportional to
/// k^-exponent on k in [1, floor(sqrt(n))]. Self-loops and repeated stub
/// pairs are discarded, so the result is simple. An odd degree sum is fixed
/// internally by resampling one node. Deterministic under seed.
Graph generate_power_law(std::size_t node_count, double exponent, std::uint64_t seed);

Graph generate(const GeneratorSpec& spec);

}  // namespace netmend

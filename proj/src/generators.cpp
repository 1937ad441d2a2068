#include "netmend/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "netmend/errors.hpp"
#include "netmend/rng.hpp"

namespace netmend {

void GeneratorSpec::validate() const {
    if (node_count < 2) throw ConfigError("generator needs at least 2 nodes");
    switch (kind) {
        case Kind::ErdosRenyi:
            if (edge_probability < 0.0 || edge_probability > 1.0)
                throw ConfigError("edge probability must lie in [0,1]");
            break;
        case Kind::PowerLaw:
            if (!(exponent > 2.0)) throw ConfigError("power-law exponent must exceed 2");
            break;
    }
}

Graph generate_erdos_renyi(std::size_t node_count, double edge_probability, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::ErdosRenyi;
    spec.node_count = node_count;
    spec.edge_probability = edge_probability;
    spec.validate();

    Rng rng = make_rng(seed, stream::generator);
    Graph g(node_count);
    for (NodeId u = 0; u + 1 < node_count; ++u)
        for (NodeId v = u + 1; v < node_count; ++v)
            if (uniform_real01(rng) < edge_probability) g.add_edge(u, v);
    return g;
}

namespace {

// Inverse-CDF sample of k in [1, k_max] with mass proportional to k^-exponent.
std::size_t sample_degree(Rng& rng, const std::vector<double>& cdf) {
    const double u = uniform_real01(rng) * cdf.back();
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::size_t>(it - cdf.begin()) + 1;
}

}  // namespace

Graph generate_power_law(std::size_t node_count, double exponent, std::uint64_t seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::PowerLaw;
    spec.node_count = node_count;
    spec.exponent = exponent;
    spec.validate();

    const std::size_t k_max =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(node_count))));
    std::vector<double> cdf(k_max);
    double acc = 0.0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        acc += std::pow(static_cast<double>(k), -exponent);
        cdf[k - 1] = acc;
    }

    Rng rng = make_rng(seed, stream::generator);
    std::vector<std::size_t> degree(node_count);
    std::size_t stub_total = 0;
    for (std::size_t v = 0; v < node_count; ++v) {
        degree[v] = sample_degree(rng, cdf);
        stub_total += degree[v];
    }
    while (stub_total % 2 != 0) {
        const std::size_t v = static_cast<std::size_t>(uniform_index(rng, node_count));
        stub_total -= degree[v];
        degree[v] = sample_degree(rng, cdf);
        stub_total += degree[v];
    }

    std::vector<NodeId> stubs;
    stubs.reserve(stub_total);
    for (std::size_t v = 0; v < node_count; ++v)
        stubs.insert(stubs.end(), degree[v], static_cast<NodeId>(v));
    shuffle(stubs, rng);

    Graph g(node_count);
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        if (stubs[i] == stubs[i + 1]) continue;  // self-loop, drop
        g.add_edge(stubs[i], stubs[i + 1]);      // repeated pair is a no-op
    }
    return g;
}

Graph generate(const GeneratorSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case GeneratorSpec::Kind::ErdosRenyi:
            return generate_erdos_renyi(spec.node_count, spec.edge_probability, spec.seed);
        case GeneratorSpec::Kind::PowerLaw:
            return generate_power_law(spec.node_count, spec.exponent, spec.seed);
    }
    throw ConfigError("unknown generator kind");
}

}  // namespace netmend

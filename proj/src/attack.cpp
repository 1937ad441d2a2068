#include "netmend/attack.hpp"

#include <fstream>

#include "netmend/errors.hpp"
#include "netmend/format.hpp"
#include "netmend/rng.hpp"

namespace netmend {

Edge targeted_victim(const Graph& g) {
    if (g.edge_count() == 0) throw std::domain_error("no edges to attack");
    Edge best{0, 0};
    std::size_t best_sum = 0;
    bool found = false;
    for (const Edge& e : g.edges()) {  // edges() is sorted, so first max wins ties
        const std::size_t sum = g.degree(e.u) + g.degree(e.v);
        if (!found || sum > best_sum) {
            best = e;
            best_sum = sum;
            found = true;
        }
    }
    return best;
}

AttackResult fragment(const Graph& g, const AttackSpec& spec) {
    if (spec.target_components < 2)
        throw std::invalid_argument("target component count must be at least 2");
    if (spec.target_components > g.node_count())
        throw std::invalid_argument("cannot split " + std::to_string(g.node_count()) +
                                    " nodes into " + std::to_string(spec.target_components) +
                                    " components");

    AttackResult result{g, {}};
    Rng rng = make_rng(spec.seed, stream::attack);
    std::size_t component_count = components(result.graph).count();
    while (component_count < spec.target_components) {
        if (result.graph.edge_count() == 0 ||
            (spec.max_removals && result.trace.size() >= *spec.max_removals)) {
            throw AttackFailedError(
                "attack stopped at " + std::to_string(component_count) + " of " +
                    std::to_string(spec.target_components) + " components after " +
                    std::to_string(result.trace.size()) + " removals",
                result.trace);
        }
        Edge victim{0, 0};
        if (spec.mode == AttackMode::Targeted) {
            victim = targeted_victim(result.graph);
        } else {
            const auto edges = result.graph.edges();
            victim = edges[uniform_index(rng, edges.size())];
        }
        result.graph.remove_edge(victim.u, victim.v);

        const ComponentPartition parts = components(result.graph);
        component_count = parts.count();
        const Graph lcc = result.graph.induced_subgraph(parts.lcc());
        result.trace.push_back(
            AttackStep{result.trace.size() + 1, victim.u, victim.v, component_count,
                       laplacian_energy_fast(lcc),
                       static_cast<double>(lcc.node_count()) /
                           static_cast<double>(result.graph.node_count())});
    }
    return result;
}

void save_attack_trace_csv(const AttackTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write attack trace: " + path);
    out << "step,u,v,components,L_E,S\n";
    for (const AttackStep& s : trace) {
        out << s.step << ',' << s.u << ',' << s.v << ',' << s.component_count << ','
            << detail::format_real(s.laplacian_energy) << ',' << detail::format_real(s.robustness)
            << '\n';
    }
    if (!out) throw IoError("failed while writing attack trace: " + path);
}

}  // namespace netmend

#include "netmend/restore.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "netmend/errors.hpp"
#include "netmend/format.hpp"

namespace netmend {

std::vector<double> RewirePlan::energies() const {
    std::vector<double> out;
    out.reserve(records.size());
    for (const RewireRecord& r : records) out.push_back(r.energy);
    return out;
}

std::vector<double> RewirePlan::costs() const {
    std::vector<double> out;
    out.reserve(records.size());
    for (const RewireRecord& r : records) out.push_back(r.cost);
    return out;
}

std::vector<NodeId> RewirePlan::lcc_anchors() const {
    std::vector<NodeId> out;
    out.reserve(records.size());
    for (const RewireRecord& r : records) out.push_back(r.lcc_anchor);
    return out;
}

std::vector<NodeId> RewirePlan::component_anchors() const {
    std::vector<NodeId> out;
    out.reserve(records.size());
    for (const RewireRecord& r : records) out.push_back(r.component_anchor);
    return out;
}

NodeId pick_lcc_anchor(const Graph& g, const std::vector<NodeId>& component) {
    if (component.empty()) throw std::invalid_argument("empty component");
    NodeId best = component.front();
    std::size_t best_degree = g.degree(best);
    for (NodeId v : component) {  // component ids are sorted, so ties keep the smallest
        if (g.degree(v) > best_degree) {
            best = v;
            best_degree = g.degree(v);
        }
    }
    return best;
}

std::pair<std::size_t, NodeId> pick_component_anchor(const Graph& g,
                                                     const ComponentPartition& parts) {
    if (parts.count() < 2) throw std::invalid_argument("no disconnected component to anchor");
    return {1, pick_lcc_anchor(g, parts.sets[1])};
}

namespace {

std::size_t edges_within(const Graph& g, const std::vector<NodeId>& component) {
    std::size_t degree_sum = 0;
    for (NodeId v : component) degree_sum += g.degree(v);
    return degree_sum / 2;
}

// Neighbors of `anchor` that are legal detach candidates (degree >= 2),
// ordered by degree descending. Equal-degree runs are shuffled under the run
// RNG or left id-ascending, per options.
std::vector<NodeId> detach_candidates(const Graph& g, NodeId anchor, Rng& rng,
                                      const RestoreOptions& options) {
    std::vector<NodeId> candidates;
    for (NodeId j : g.neighbors(anchor))
        if (g.degree(j) >= 2) candidates.push_back(j);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
    if (options.tie_break == TieBreak::Seeded) {
        std::size_t run_begin = 0;
        for (std::size_t i = 1; i <= candidates.size(); ++i) {
            if (i == candidates.size() || g.degree(candidates[i]) != g.degree(candidates[run_begin])) {
                if (i - run_begin > 1) {
                    std::vector<NodeId> run(candidates.begin() + run_begin, candidates.begin() + i);
                    shuffle(run, rng);
                    std::copy(run.begin(), run.end(), candidates.begin() + run_begin);
                }
                run_begin = i;
            }
        }
    }
    return candidates;
}

RewireRecord finish_step(Graph& g, const TrustProfile& trust, std::size_t step, RewireKind kind,
                         NodeId lcc_anchor, NodeId component_anchor, std::optional<Edge> removed,
                         std::vector<NodeId> merged_nodes) {
    const double cost = edge_weight(trust.trust[lcc_anchor], trust.trust[component_anchor], 1);
    if (removed) g.remove_edge(removed->u, removed->v);
    g.add_edge(lcc_anchor, component_anchor);
    g.set_weight(lcc_anchor, component_anchor, cost);

    const ComponentPartition after = components(g);
    const Graph lcc = g.induced_subgraph(after.lcc());
    RewireRecord record;
    record.step = step;
    record.kind = kind;
    record.lcc_anchor = lcc_anchor;
    record.component_anchor = component_anchor;
    record.removed = removed;
    record.energy = laplacian_energy_fast(lcc);
    record.cost = cost;
    record.robustness =
        static_cast<double>(lcc.node_count()) / static_cast<double>(g.node_count());
    record.density = density(g);
    record.lcc_nodes = lcc.node_count();
    record.lcc_edges = lcc.edge_count();
    record.merged_nodes = std::move(merged_nodes);
    return record;
}

std::size_t rewire_bound(const Graph& g, const RestoreOptions& options) {
    return options.threshold == RewireThreshold::TotalNodes ? g.node_count()
                                                            : g.node_count() - 1;
}

}  // namespace

std::optional<RewireRecord> strategic_step(Graph& g, const TrustProfile& trust, Rng& rng,
                                           const RestoreOptions& options, std::size_t step) {
    const ComponentPartition parts = components(g);
    if (parts.count() < 2) return std::nullopt;

    const NodeId lcc_anchor = pick_lcc_anchor(g, parts.lcc());
    const auto [component_index, component_anchor] = pick_component_anchor(g, parts);

    RewireKind kind = RewireKind::Add;
    std::optional<Edge> removed;
    if (edges_within(g, parts.lcc()) > rewire_bound(g, options)) {
        for (NodeId j : detach_candidates(g, lcc_anchor, rng, options)) {
            if (!is_bridge(g, lcc_anchor, j)) {
                removed = make_edge(lcc_anchor, j);
                kind = RewireKind::Rewire;
                break;
            }
        }
        // No safe neighbor: keep the edge and add instead.
    }
    return finish_step(g, trust, step, kind, lcc_anchor, component_anchor, removed,
                       parts.sets[component_index]);
}

RestoreResult strategic_restore(const Graph& g, const TrustProfile& trust, Rng& rng,
                                const RestoreOptions& options) {
    if (trust.node_count() < g.node_count())
        throw UndefinedTrustError("trust profile does not cover the graph");
    RestoreResult result{g, {}};
    for (std::size_t step = 1;; ++step) {
        auto record = strategic_step(result.graph, trust, rng, options, step);
        if (!record) break;
        result.plan.records.push_back(std::move(*record));
    }
    return result;
}

std::optional<RewireRecord> random_rewire_step(Graph& g, const TrustProfile& trust, Rng& rng,
                                               const RestoreOptions& options, std::size_t step) {
    const ComponentPartition parts = components(g);
    if (parts.count() < 2) return std::nullopt;

    // Uniform choices all around: the LCC endpoint, the component, and the
    // node inside it.
    const std::vector<NodeId>& lcc = parts.lcc();
    const NodeId lcc_end = lcc[uniform_index(rng, lcc.size())];
    const std::size_t comp_index = 1 + uniform_index(rng, parts.count() - 1);
    const std::vector<NodeId>& comp = parts.sets[comp_index];
    const NodeId target = comp[uniform_index(rng, comp.size())];

    RewireKind kind = RewireKind::Add;
    std::optional<Edge> removed;
    if (edges_within(g, lcc) > rewire_bound(g, options)) {
        std::vector<NodeId> neighbors_of_end;
        for (NodeId j : g.neighbors(lcc_end))
            if (g.degree(j) >= 2) neighbors_of_end.push_back(j);
        shuffle(neighbors_of_end, rng);
        for (NodeId j : neighbors_of_end) {
            if (!is_bridge(g, lcc_end, j)) {
                removed = make_edge(lcc_end, j);
                kind = RewireKind::Rewire;
                break;
            }
        }
    }
    return finish_step(g, trust, step, kind, lcc_end, target, removed, parts.sets[comp_index]);
}

RestoreResult random_restore(const Graph& g, const TrustProfile& trust, Rng& rng,
                             const RestoreOptions& options) {
    if (trust.node_count() < g.node_count())
        throw UndefinedTrustError("trust profile does not cover the graph");
    RestoreResult result{g, {}};
    for (std::size_t step = 1;; ++step) {
        auto record = random_rewire_step(result.graph, trust, rng, options, step);
        if (!record) break;
        result.plan.records.push_back(std::move(*record));
    }
    return result;
}

void save_rewire_plan_csv(const RewirePlan& plan, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write rewire plan: " + path);
    out << "r,kind,i,j,removed_u,removed_v,theta,cost,S,rho,n_lcc,m_lcc\n";
    for (const RewireRecord& r : plan.records) {
        out << r.step << ',' << (r.kind == RewireKind::Rewire ? "rewire" : "add") << ','
            << r.lcc_anchor << ',' << r.component_anchor << ',';
        if (r.removed)
            out << r.removed->u << ',' << r.removed->v;
        else
            out << ',';
        out << ',' << detail::format_real(r.energy) << ',' << detail::format_real(r.cost) << ','
            << detail::format_real(r.robustness) << ',' << detail::format_real(r.density) << ','
            << r.lcc_nodes << ',' << r.lcc_edges << '\n';
    }
    if (!out) throw IoError("failed while writing rewire plan: " + path);
}

}  // namespace netmend

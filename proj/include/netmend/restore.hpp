#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netmend/graph.hpp"
#include "netmend/rng.hpp"
#include "netmend/trust.hpp"

namespace netmend {

enum class RewireKind { Rewire, Add };

/// How equal-degree candidates are ordered when choosing the neighbor to
/// detach: shuffled under the run RNG, or smallest id first.
enum class TieBreak { Seeded, Deterministic };

/// Rewire instead of add while the LCC holds more edges than this bound.
enum class RewireThreshold { TotalNodes, TotalNodesMinusOne };

struct RestoreOptions {
    RewireThreshold threshold = RewireThreshold::TotalNodes;
    TieBreak tie_break = TieBreak::Seeded;
};

/// One restoration step: the edge created between the LCC anchor and the
/// component anchor, the edge sacrificed for it (rewires only), and the
/// robustness measurements taken right after the step.
struct RewireRecord {
    std::size_t step = 0;  // 1-based
    RewireKind kind = RewireKind::Add;
    NodeId lcc_anchor = 0;        // endpoint inside the LCC
    NodeId component_anchor = 0;  // endpoint from the attached component
    std::optional<Edge> removed;  // present iff kind == Rewire
    double energy = 0.0;          // Laplacian energy of the new LCC
    double cost = 0.0;            // weight of the created edge, in [1,2]
    double robustness = 0.0;
    double density = 0.0;
    std::size_t lcc_nodes = 0;
    std::size_t lcc_edges = 0;
    /// Nodes of the component attached at this step.
    std::vector<NodeId> merged_nodes;
};

struct RewirePlan {
    std::vector<RewireRecord> records;

    std::size_t size() const { return records.size(); }
    std::vector<double> energies() const;
    std::vector<double> costs() const;
    std::vector<NodeId> lcc_anchors() const;
    std::vector<NodeId> component_anchors() const;
};

struct RestoreResult {
    Graph graph;
    RewirePlan plan;
};

/// Max-degree node of the given component, smallest id on ties.
NodeId pick_lcc_anchor(const Graph& g, const std::vector<NodeId>& component);

/// Largest non-LCC component (partition order already breaks ties) and its
/// max-degree node. Returns {component index, node}. The partition must hold
/// at least two components.
std::pair<std::size_t, NodeId> pick_component_anchor(const Graph& g,
                                                     const ComponentPartition& parts);

/// Performs one strategic step on g: attach the largest disconnected
/// component to the LCC, rewiring an LCC edge off the max-degree anchor when
/// the LCC has edges to spare and adding a fresh edge otherwise. A rewire
/// never disconnects the LCC; if no neighbor can be detached safely the step
/// falls back to a plain addition. Returns nullopt when g is already
/// connected.
std::optional<RewireRecord> strategic_step(Graph& g, const TrustProfile& trust, Rng& rng,
                                           const RestoreOptions& options, std::size_t step);

/// Runs strategic steps until one component remains. The input graph is left
/// untouched; an already-connected input yields an empty plan.
RestoreResult strategic_restore(const Graph& g, const TrustProfile& trust, Rng& rng,
                                const RestoreOptions& options = {});

/// Baseline step for comparison studies: same add-versus-rewire rule and the
/// same safety checks, but the detached edge and the reattachment target are
/// drawn uniformly instead of by degree.
std::optional<RewireRecord> random_rewire_step(Graph& g, const TrustProfile& trust, Rng& rng,
                                               const RestoreOptions& options, std::size_t step);

RestoreResult random_restore(const Graph& g, const TrustProfile& trust, Rng& rng,
                             const RestoreOptions& options = {});

/// Columns: r,kind,i,j,removed_u,removed_v,theta,cost,S,rho,n_lcc,m_lcc.
void save_rewire_plan_csv(const RewirePlan& plan, const std::string& path);

}  // namespace netmend

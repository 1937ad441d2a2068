#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "netmend/graph.hpp"

namespace netmend {

enum class AttackMode { Random, Targeted };

struct AttackSpec {
    AttackMode mode = AttackMode::Random;
    /// Removal stops once the graph has at least this many components.
    std::size_t target_components = 2;
    std::uint64_t seed = 0;
    /// Safety cap on removals; exceeding it raises AttackFailedError.
    std::optional<std::size_t> max_removals;
};

struct AttackStep {
    std::size_t step = 0;  // 1-based
    NodeId u = 0;
    NodeId v = 0;
    std::size_t component_count = 0;
    double laplacian_energy = 0.0;  // of the LCC after the removal
    double robustness = 0.0;
};

using AttackTrace = std::vector<AttackStep>;

struct AttackResult {
    Graph graph;
    AttackTrace trace;
};

/// Raised when the target component count is unreachable within the cap.
/// Carries whatever was removed up to that point.
class AttackFailedError : public std::runtime_error {
  public:
    AttackFailedError(const std::string& what, AttackTrace trace)
        : std::runtime_error(what), partial_trace(std::move(trace)) {}
    AttackTrace partial_trace;
};

/// Progressively removes edges (uniformly at random or highest
/// degree-sum first) until the component count reaches the target.
/// The input graph is left untouched. Inputs already at or past the target
/// return unchanged with an empty trace.
AttackResult fragment(const Graph& g, const AttackSpec& spec);

/// Edge whose endpoint degree sum is maximal; ties resolve to the
/// lexicographically smallest (u,v). Throws std::domain_error on an
/// edgeless graph.
Edge targeted_victim(const Graph& g);

/// Columns: step,u,v,components,L_E,S.
void save_attack_trace_csv(const AttackTrace& trace, const std::string& path);

}  // namespace netmend

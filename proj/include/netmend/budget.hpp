#pragma once

/// Budget-constrained restoration. A full strategic repair plan is priced,
/// then replayed under a rising budget released in ten equal increments. At
/// each increment a 0/1 knapsack picks the most energy-valuable plan entries
/// that still fit, and picked entries execute in plan order as soon as their
/// prerequisites are in place.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netmend/graph.hpp"
#include "netmend/restore.hpp"
#include "netmend/rng.hpp"
#include "netmend/trust.hpp"

namespace netmend {

struct KnapsackSelection {
    std::vector<std::size_t> indices;  ///< Chosen item positions, ascending.
    double total_value = 0.0;
    double total_cost = 0.0;
    long long total_cost_cents = 0;
};

/// 0/1 knapsack maximizing total value under the cost budget. Costs are
/// discretized to integer cents, which keeps the selection exact at the cost
/// magnitudes that occur here. Throws std::domain_error on mismatched input
/// lengths, non-positive costs, or a negative budget.
KnapsackSelection knapsack(std::span<const double> values, std::span<const double> costs,
                           double budget);

/// Cent-space core used by the scheduler. Costs of zero cents are allowed
/// (sub-cent rounding); negative ones are not.
KnapsackSelection knapsack_cents(std::span<const double> values,
                                 std::span<const long long> cost_cents, long long budget_cents);

/// One of the ten budget increments.
struct BudgetIncrement {
    double budget = 0.0;                ///< Cumulative budget available so far.
    std::vector<std::size_t> selected;  ///< Plan indices newly funded here.
    std::vector<std::size_t> executed;  ///< Plan indices carried out here.
};

/// One executed plan entry, measured on the replayed graph right after it ran.
struct ExecutionRecord {
    std::size_t plan_index = 0;  ///< Position in the strategic plan.
    std::size_t increment = 0;   ///< 1-based increment during which it ran.
    double energy = 0.0;         ///< Largest-component Laplacian energy after the move.
    double cost = 0.0;           ///< Planned cost charged for the move.
    double robustness = 0.0;
    double density = 0.0;
    std::size_t lcc_nodes = 0;
    std::size_t lcc_edges = 0;
    bool deferred = false;         ///< Waited at least one increment for prerequisites.
    bool re_anchored = false;      ///< Attachment endpoint moved to the current hub.
    bool removal_skipped = false;  ///< Planned deletion dropped to keep the graph connected.
};

struct BudgetSchedule {
    double total_budget = 0.0;
    std::vector<BudgetIncrement> increments;   ///< Always ten entries.
    std::vector<ExecutionRecord> executions;   ///< In execution order.

    std::vector<double> energies() const;  ///< Energy per execution, in order.
};

struct BudgetRestoreResult {
    Graph graph;
    RewirePlan plan;  ///< The priced strategic plan that was replayed.
    BudgetSchedule schedule;
};

/// Restores `g` under a total budget. Without an explicit budget the full
/// plan's total cost is used, which makes the run end at the same graph as the
/// strategic mechanism. Throws ConfigError on a non-positive explicit budget,
/// UndefinedTrustError when the trust profile does not cover the graph.
BudgetRestoreResult budget_restore(const Graph& g, const TrustProfile& trust,
                                   std::optional<double> budget, Rng& rng,
                                   const RestoreOptions& options = {});

/// Writes the replay table: one row per execution, labelled with the budget
/// of the increment it ran under, listing the energies of every execution so
/// far with the newest first, padded to a fixed column count.
void save_budget_schedule_csv(const BudgetSchedule& schedule, const std::string& path);

}  // namespace netmend

#include "netmend/budget.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "netmend/errors.hpp"
#include "netmend/format.hpp"

namespace netmend {

std::vector<double> BudgetSchedule::energies() const {
    std::vector<double> out;
    out.reserve(executions.size());
    for (const ExecutionRecord& e : executions) out.push_back(e.energy);
    return out;
}

KnapsackSelection knapsack_cents(std::span<const double> values,
                                 std::span<const long long> cost_cents, long long budget_cents) {
    if (values.size() != cost_cents.size())
        throw std::domain_error("knapsack: values and costs differ in length");
    for (long long c : cost_cents)
        if (c < 0) throw std::domain_error("knapsack: negative cost");
    if (budget_cents < 0) throw std::domain_error("knapsack: negative budget");

    const std::size_t n = values.size();
    long long total = 0;
    for (long long c : cost_cents) total += c;
    // Capacity beyond the total cost changes nothing; clamping bounds the table.
    const auto capacity = static_cast<std::size_t>(std::min(budget_cents, total));

    std::vector<double> best(capacity + 1, 0.0);
    std::vector<std::vector<char>> keep(n, std::vector<char>(capacity + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::size_t>(cost_cents[i]);
        if (c > capacity) continue;
        for (std::size_t w = capacity + 1; w-- > c;) {
            const double candidate = best[w - c] + values[i];
            if (candidate > best[w]) {
                best[w] = candidate;
                keep[i][w] = 1;
            }
        }
    }

    KnapsackSelection sel;
    std::size_t w = capacity;
    for (std::size_t i = n; i-- > 0;) {
        if (keep[i][w]) {
            sel.indices.push_back(i);
            sel.total_value += values[i];
            sel.total_cost_cents += cost_cents[i];
            w -= static_cast<std::size_t>(cost_cents[i]);
        }
    }
    std::reverse(sel.indices.begin(), sel.indices.end());
    sel.total_cost = static_cast<double>(sel.total_cost_cents) / 100.0;
    return sel;
}

KnapsackSelection knapsack(std::span<const double> values, std::span<const double> costs,
                           double budget) {
    if (values.size() != costs.size())
        throw std::domain_error("knapsack: values and costs differ in length");
    if (budget < 0.0) throw std::domain_error("knapsack: negative budget");
    std::vector<long long> cents(costs.size());
    for (std::size_t i = 0; i < costs.size(); ++i) {
        if (!(costs[i] > 0.0)) throw std::domain_error("knapsack: costs must be positive");
        cents[i] = std::llround(costs[i] * 100.0);
    }
    return knapsack_cents(values, cents, std::llround(budget * 100.0));
}

BudgetRestoreResult budget_restore(const Graph& g, const TrustProfile& trust,
                                   std::optional<double> budget, Rng& rng,
                                   const RestoreOptions& options) {
    if (budget && !(*budget > 0.0)) throw ConfigError("budget must be positive");

    RestoreResult scratch = strategic_restore(g, trust, rng, options);
    const std::size_t entries = scratch.plan.size();
    const std::vector<double> values = scratch.plan.energies();

    std::vector<long long> cents(entries);
    long long total_cents = 0;
    for (std::size_t r = 0; r < entries; ++r) {
        cents[r] = std::llround(scratch.plan.records[r].cost * 100.0);
        total_cents += cents[r];
    }
    const long long budget_cents = budget ? std::llround(*budget * 100.0) : total_cents;

    // Prerequisites: an entry waits for any earlier entry that merged in its
    // attachment hub, and for the entry that created the edge it deletes.
    std::vector<std::vector<std::size_t>> deps(entries);
    for (std::size_t r = 0; r < entries; ++r) {
        const RewireRecord& rec = scratch.plan.records[r];
        for (std::size_t p = 0; p < r; ++p) {
            const RewireRecord& prev = scratch.plan.records[p];
            const bool hub_merged_late = std::binary_search(
                prev.merged_nodes.begin(), prev.merged_nodes.end(), rec.lcc_anchor);
            const bool removes_added_edge =
                rec.removed && *rec.removed == make_edge(prev.lcc_anchor, prev.component_anchor);
            if (hub_merged_late || removes_added_edge) deps[r].push_back(p);
        }
    }

    BudgetRestoreResult result{g, std::move(scratch.plan), {}};
    BudgetSchedule& schedule = result.schedule;
    schedule.total_budget = static_cast<double>(budget_cents) / 100.0;
    Graph& replay = result.graph;

    std::vector<char> selected(entries, 0), executed(entries, 0), waited(entries, 0);
    long long committed_cents = 0;

    auto execute_entry = [&](std::size_t r, std::size_t increment, bool forced) {
        const RewireRecord& rec = result.plan.records[r];
        NodeId anchor = rec.lcc_anchor;
        bool re_anchored = false;
        if (forced) {
            const ComponentPartition parts = components(replay);
            const std::vector<NodeId>& lcc = parts.lcc();
            if (!std::binary_search(lcc.begin(), lcc.end(), anchor)) {
                anchor = pick_lcc_anchor(replay, lcc);
                re_anchored = true;
            }
        }
        // The replayed graph can differ from the planning graph, so the
        // planned deletion is re-checked and dropped rather than allowed to
        // split the component.
        bool removal_skipped = false;
        if (rec.removed) {
            if (replay.has_edge(rec.removed->u, rec.removed->v) &&
                !is_bridge(replay, rec.removed->u, rec.removed->v))
                replay.remove_edge(rec.removed->u, rec.removed->v);
            else
                removal_skipped = true;
        }
        replay.add_edge(anchor, rec.component_anchor);
        replay.set_weight(anchor, rec.component_anchor, rec.cost);
        executed[r] = 1;

        const ComponentPartition after = components(replay);
        const Graph lcc = replay.induced_subgraph(after.lcc());
        ExecutionRecord exec;
        exec.plan_index = r;
        exec.increment = increment;
        exec.energy = laplacian_energy_fast(lcc);
        exec.cost = rec.cost;
        exec.robustness =
            static_cast<double>(lcc.node_count()) / static_cast<double>(replay.node_count());
        exec.density = density(replay);
        exec.lcc_nodes = lcc.node_count();
        exec.lcc_edges = lcc.edge_count();
        exec.deferred = waited[r] != 0;
        exec.re_anchored = re_anchored;
        exec.removal_skipped = removal_skipped;
        schedule.executions.push_back(exec);
    };

    schedule.increments.resize(10);
    for (std::size_t i = 1; i <= 10; ++i) {
        BudgetIncrement& inc = schedule.increments[i - 1];
        const long long released = (budget_cents * static_cast<long long>(i) + 5) / 10;
        inc.budget = static_cast<double>(released) / 100.0;

        std::vector<std::size_t> remainder;
        std::vector<double> rem_values;
        std::vector<long long> rem_cents;
        for (std::size_t r = 0; r < entries; ++r) {
            if (selected[r]) continue;
            remainder.push_back(r);
            rem_values.push_back(values[r]);
            rem_cents.push_back(cents[r]);
        }
        const long long headroom = std::max<long long>(released - committed_cents, 0);
        const KnapsackSelection pick = knapsack_cents(rem_values, rem_cents, headroom);
        for (std::size_t k : pick.indices) {
            const std::size_t r = remainder[k];
            selected[r] = 1;
            committed_cents += cents[r];
            inc.selected.push_back(r);
        }

        for (std::size_t r = 0; r < entries; ++r) {
            if (!selected[r] || executed[r]) continue;
            bool ready = true;
            for (std::size_t p : deps[r]) {
                if (!executed[p]) {
                    ready = false;
                    break;
                }
            }
            if (ready) {
                execute_entry(r, i, false);
                inc.executed.push_back(r);
            } else {
                waited[r] = 1;
            }
        }
    }

    // Whatever is still pending was paid for: run it against the current hub.
    for (std::size_t r = 0; r < entries; ++r) {
        if (selected[r] && !executed[r]) {
            execute_entry(r, 10, true);
            schedule.increments.back().executed.push_back(r);
        }
    }
    return result;
}

void save_budget_schedule_csv(const BudgetSchedule& schedule, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write budget schedule: " + path);
    const std::size_t columns = schedule.executions.size();
    out << "budget";
    for (std::size_t k = 0; k < columns; ++k) out << ',' << k;
    out << '\n';
    // One row per execution, labelled with the budget released by the
    // increment it ran under. Each row repeats the previous row's energies
    // shifted one column right, with the new energy in front.
    for (std::size_t e = 0; e < columns; ++e) {
        const std::size_t inc = schedule.executions[e].increment;
        out << detail::format_real(schedule.increments[inc - 1].budget);
        for (std::size_t k = 0; k < columns; ++k) {
            out << ',';
            if (k <= e) out << detail::format_real(schedule.executions[e - k].energy);
        }
        out << '\n';
    }
    if (!out) throw IoError("failed while writing budget schedule: " + path);
}

}  // namespace netmend

#pragma once

/// Per-step metric series collected during attack and restoration runs, and
/// their machine-readable CSV/JSON renderings. Output is byte-stable for a
/// fixed series: fixed column order, reals at six significant digits, LF line
/// endings.

#include <cstddef>
#include <string>
#include <vector>

#include "netmend/attack.hpp"
#include "netmend/budget.hpp"
#include "netmend/graph.hpp"
#include "netmend/restore.hpp"

namespace netmend {

enum class Phase { Attack, Restore };
enum class Mechanism { Strategic, Budget, Random };

const char* phase_name(Phase p);
const char* mechanism_name(Mechanism m);

struct MetricsRow {
    std::size_t step = 0;  ///< 1-based, counted per (phase, mechanism).
    Phase phase = Phase::Attack;
    Mechanism mechanism = Mechanism::Strategic;
    double laplacian_energy = 0.0;  ///< On the LCC subgraph.
    double robustness = 0.0;        ///< On the whole graph.
    double density = 0.0;           ///< On the whole graph.
    std::size_t lcc_nodes = 0;
    std::size_t lcc_edges = 0;
    double cumulative_cost = 0.0;
};

class MetricsSeries {
  public:
    /// Appends a snapshot measured on `g`; `cost` is added to the running
    /// cumulative cost.
    void record(const Graph& g, Phase phase, Mechanism mechanism, double cost = 0.0);

    /// Appends a snapshot from already-computed figures.
    void append(Phase phase, Mechanism mechanism, double laplacian_energy, double robustness,
                double density, std::size_t lcc_nodes, std::size_t lcc_edges, double cost = 0.0);

    const std::vector<MetricsRow>& rows() const { return rows_; }

    void emit_csv(const std::string& path) const;
    void emit_json(const std::string& path) const;

  private:
    std::size_t next_step(Phase phase, Mechanism mechanism);

    std::vector<MetricsRow> rows_;
    double cumulative_cost_ = 0.0;
};

/// Replays an attack trace against `pre_attack` (copied), recording one
/// attack-phase snapshot per removal.
void append_attack_rows(MetricsSeries& series, const Graph& pre_attack, const AttackTrace& trace,
                        Mechanism mechanism);

/// One restore-phase snapshot per plan record, using the figures stored in the
/// plan.
void append_plan_rows(MetricsSeries& series, const RewirePlan& plan, Mechanism mechanism);

/// One restore-phase snapshot per budget execution.
void append_schedule_rows(MetricsSeries& series, const BudgetSchedule& schedule);

/// Reads back a CSV produced by emit_csv. Throws ParseError with a line
/// number on malformed input, IoError if the file cannot be opened.
std::vector<MetricsRow> load_metrics_csv(const std::string& path);

}  // namespace netmend

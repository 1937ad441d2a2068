#include "netmend/metrics_report.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "netmend/errors.hpp"
#include "netmend/format.hpp"

namespace netmend {

const char* phase_name(Phase p) { return p == Phase::Attack ? "attack" : "restore"; }

const char* mechanism_name(Mechanism m) {
    switch (m) {
        case Mechanism::Strategic: return "strategic";
        case Mechanism::Budget: return "budget";
        case Mechanism::Random: return "random";
    }
    throw std::logic_error("unknown mechanism");
}

std::size_t MetricsSeries::next_step(Phase phase, Mechanism mechanism) {
    std::size_t count = 0;
    for (const MetricsRow& r : rows_)
        if (r.phase == phase && r.mechanism == mechanism) ++count;
    return count + 1;
}

void MetricsSeries::append(Phase phase, Mechanism mechanism, double laplacian_energy,
                           double robustness, double density, std::size_t lcc_nodes,
                           std::size_t lcc_edges, double cost) {
    cumulative_cost_ += cost;
    MetricsRow row;
    row.step = next_step(phase, mechanism);
    row.phase = phase;
    row.mechanism = mechanism;
    row.laplacian_energy = laplacian_energy;
    row.robustness = robustness;
    row.density = density;
    row.lcc_nodes = lcc_nodes;
    row.lcc_edges = lcc_edges;
    row.cumulative_cost = cumulative_cost_;
    rows_.push_back(row);
}

void MetricsSeries::record(const Graph& g, Phase phase, Mechanism mechanism, double cost) {
    const MetricsSnapshot snap = measure(g);
    append(phase, mechanism, snap.laplacian_energy, snap.robustness, snap.density, snap.lcc_nodes,
           snap.lcc_edges, cost);
}

void append_attack_rows(MetricsSeries& series, const Graph& pre_attack, const AttackTrace& trace,
                        Mechanism mechanism) {
    Graph g = pre_attack;
    for (const AttackStep& step : trace) {
        if (!g.remove_edge(step.u, step.v))
            throw std::invalid_argument("attack trace does not match the graph");
        series.record(g, Phase::Attack, mechanism, 0.0);
    }
}

void append_plan_rows(MetricsSeries& series, const RewirePlan& plan, Mechanism mechanism) {
    for (const RewireRecord& r : plan.records)
        series.append(Phase::Restore, mechanism, r.energy, r.robustness, r.density, r.lcc_nodes,
                      r.lcc_edges, r.cost);
}

void append_schedule_rows(MetricsSeries& series, const BudgetSchedule& schedule) {
    for (const ExecutionRecord& e : schedule.executions)
        series.append(Phase::Restore, Mechanism::Budget, e.energy, e.robustness, e.density,
                      e.lcc_nodes, e.lcc_edges, e.cost);
}

namespace {

void write_row_csv(std::ostream& out, const MetricsRow& r) {
    out << r.step << ',' << phase_name(r.phase) << ',' << mechanism_name(r.mechanism) << ','
        << detail::format_real(r.laplacian_energy) << ',' << detail::format_real(r.robustness)
        << ',' << detail::format_real(r.density) << ',' << r.lcc_nodes << ',' << r.lcc_edges << ','
        << detail::format_real(r.cumulative_cost) << '\n';
}

}  // namespace

void MetricsSeries::emit_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write metrics CSV: " + path);
    out << "step,phase,mechanism,L_E,S,rho,n_lcc,m_lcc,cum_cost\n";
    for (const MetricsRow& r : rows_) write_row_csv(out, r);
    if (!out) throw IoError("failed while writing metrics CSV: " + path);
}

void MetricsSeries::emit_json(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write metrics JSON: " + path);
    if (rows_.empty()) {
        out << "[]\n";
    } else {
        out << "[\n";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const MetricsRow& r = rows_[i];
            out << "  {\"step\": " << r.step << ", \"phase\": \"" << phase_name(r.phase)
                << "\", \"mechanism\": \"" << mechanism_name(r.mechanism) << "\", \"L_E\": "
                << detail::format_real(r.laplacian_energy) << ", \"S\": "
                << detail::format_real(r.robustness) << ", \"rho\": "
                << detail::format_real(r.density) << ", \"n_lcc\": " << r.lcc_nodes
                << ", \"m_lcc\": " << r.lcc_edges << ", \"cum_cost\": "
                << detail::format_real(r.cumulative_cost) << '}'
                << (i + 1 < rows_.size() ? ",\n" : "\n");
        }
        out << "]\n";
    }
    if (!out) throw IoError("failed while writing metrics JSON: " + path);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

}  // namespace

std::vector<MetricsRow> load_metrics_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read metrics CSV: " + path);
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw ParseError("empty metrics CSV", 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "step,phase,mechanism,L_E,S,rho,n_lcc,m_lcc,cum_cost")
        throw ParseError("unexpected metrics CSV header", line_no);

    std::vector<MetricsRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::vector<std::string> f = split_fields(line);
        if (f.size() != 9) throw ParseError("expected 9 fields", line_no);
        MetricsRow row;
        try {
            row.step = std::stoul(f[0]);
            if (f[1] == "attack")
                row.phase = Phase::Attack;
            else if (f[1] == "restore")
                row.phase = Phase::Restore;
            else
                throw std::invalid_argument("phase");
            if (f[2] == "strategic")
                row.mechanism = Mechanism::Strategic;
            else if (f[2] == "budget")
                row.mechanism = Mechanism::Budget;
            else if (f[2] == "random")
                row.mechanism = Mechanism::Random;
            else
                throw std::invalid_argument("mechanism");
            row.laplacian_energy = std::stod(f[3]);
            row.robustness = std::stod(f[4]);
            row.density = std::stod(f[5]);
            row.lcc_nodes = std::stoul(f[6]);
            row.lcc_edges = std::stoul(f[7]);
            row.cumulative_cost = std::stod(f[8]);
        } catch (const std::exception&) {
            throw ParseError("malformed metrics row", line_no);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace netmend

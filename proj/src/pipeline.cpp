#include "netmend/pipeline.hpp"

#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "netmend/budget.hpp"
#include "netmend/edge_list_io.hpp"
#include "netmend/errors.hpp"
#include "netmend/format.hpp"
#include "netmend/metrics_report.hpp"
#include "netmend/rng.hpp"
#include "netmend/trust.hpp"

namespace fs = std::filesystem;

namespace netmend {

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        const unsigned long long parsed = std::stoull(value, &consumed);
        if (consumed != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("invalid integer for '" + key + "': " + value);
    }
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t consumed = 0;
        const double parsed = std::stod(value, &consumed);
        if (consumed != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw ConfigError("invalid number for '" + key + "': " + value);
    }
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

void RunConfig::validate() const {
    if (!seed) throw ConfigError("seed is required");
    const bool has_gen = gen_kind.has_value();
    const bool has_dataset = !dataset_path.empty();
    if (has_gen == has_dataset)
        throw ConfigError("exactly one graph source is required: gen=... or dataset=...");
    if (has_gen) {
        if (!gen_n) throw ConfigError("n is required for a generated graph");
        if (*gen_kind == GeneratorSpec::Kind::ErdosRenyi) {
            if (!gen_p) throw ConfigError("p is required for gen=er");
            if (gen_gamma) throw ConfigError("gamma does not apply to gen=er");
        } else {
            if (!gen_gamma) throw ConfigError("gamma is required for gen=power-law");
            if (gen_p) throw ConfigError("p does not apply to gen=power-law");
        }
    } else if (gen_n || gen_p || gen_gamma) {
        throw ConfigError("n/p/gamma do not apply to dataset runs");
    }
    if (!target_components) throw ConfigError("q (target component count) is required");
    if (*target_components < 2) throw ConfigError("q must be at least 2");
    if (trans_max < trans_min || trans_max < 1)
        throw ConfigError("transaction range requires 1 <= trans-min <= trans-max");
    if (budget && !(*budget > 0.0)) throw ConfigError("budget must be positive (or auto)");
    if (repeats < 1) throw ConfigError("repeats must be at least 1");
    if (out_dir.empty()) throw ConfigError("out directory must not be empty");
}

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value) {
    if (key == "gen") {
        if (value == "er")
            config.gen_kind = GeneratorSpec::Kind::ErdosRenyi;
        else if (value == "power-law" || value == "power_law")
            config.gen_kind = GeneratorSpec::Kind::PowerLaw;
        else
            throw ConfigError("unknown generator '" + value + "' (expected er or power-law)");
    } else if (key == "n") {
        config.gen_n = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "p") {
        config.gen_p = parse_real(key, value);
    } else if (key == "gamma") {
        config.gen_gamma = parse_real(key, value);
    } else if (key == "dataset") {
        config.dataset_path = value;
    } else if (key == "transactions") {
        config.transactions_path = value;
    } else if (key == "trans-min") {
        config.trans_min = parse_u64(key, value);
    } else if (key == "trans-max") {
        config.trans_max = parse_u64(key, value);
    } else if (key == "attack") {
        if (value == "random")
            config.attack_mode = AttackMode::Random;
        else if (value == "targeted")
            config.attack_mode = AttackMode::Targeted;
        else
            throw ConfigError("unknown attack mode '" + value + "'");
    } else if (key == "q") {
        config.target_components = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "max-removals") {
        config.max_removals = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "mechanism") {
        if (value == "strategic")
            config.mechanism = MechanismChoice::Strategic;
        else if (value == "budget")
            config.mechanism = MechanismChoice::Budget;
        else if (value == "both")
            config.mechanism = MechanismChoice::Both;
        else
            throw ConfigError("unknown mechanism '" + value + "'");
    } else if (key == "budget") {
        if (value == "auto")
            config.budget.reset();
        else
            config.budget = parse_real(key, value);
    } else if (key == "baseline") {
        if (value == "random")
            config.random_baseline = true;
        else if (value == "none")
            config.random_baseline = false;
        else
            throw ConfigError("unknown baseline '" + value + "' (expected none or random)");
    } else if (key == "threshold") {
        if (value == "n")
            config.restore.threshold = RewireThreshold::TotalNodes;
        else if (value == "n-1")
            config.restore.threshold = RewireThreshold::TotalNodesMinusOne;
        else
            throw ConfigError("unknown threshold '" + value + "' (expected n or n-1)");
    } else if (key == "tie-break") {
        if (value == "seeded")
            config.restore.tie_break = TieBreak::Seeded;
        else if (value == "deterministic")
            config.restore.tie_break = TieBreak::Deterministic;
        else
            throw ConfigError("unknown tie-break '" + value + "'");
    } else if (key == "seed") {
        config.seed = parse_u64(key, value);
    } else if (key == "repeats") {
        config.repeats = static_cast<std::size_t>(parse_u64(key, value));
        if (config.repeats < 1) throw ConfigError("repeats must be at least 1");
    } else if (key == "out") {
        config.out_dir = value;
    } else {
        throw ConfigError("unknown config key '" + key + "'");
    }
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file: " + path);
    RunConfig config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + " line " + std::to_string(line_no) + ": expected key=value");
        try {
            apply_config_entry(config, trim(stripped.substr(0, eq)),
                               trim(stripped.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(path + " line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return config;
}

namespace {

struct PlanTally {
    std::size_t adds = 0;
    std::size_t rewires = 0;
};

PlanTally tally(const RewirePlan& plan) {
    PlanTally t;
    for (const RewireRecord& r : plan.records)
        (r.kind == RewireKind::Add ? t.adds : t.rewires)++;
    return t;
}

std::string final_state(const Graph& g) {
    const MetricsSnapshot snap = measure(g);
    std::ostringstream out;
    out << "L_E=" << detail::format_real(snap.laplacian_energy)
        << " S=" << detail::format_real(snap.robustness) << " m=" << g.edge_count();
    return out.str();
}

std::vector<std::string> run_single(const RunConfig& config, std::uint64_t seed,
                                    const fs::path& dir) {
    std::error_code dir_error;
    fs::create_directories(dir, dir_error);
    if (dir_error) throw IoError("cannot create output directory " + dir.string());

    std::vector<std::string> summary;
    const std::string tag = "seed " + std::to_string(seed) + ": ";

    Graph base;
    if (config.gen_kind) {
        GeneratorSpec spec;
        spec.kind = *config.gen_kind;
        spec.node_count = *config.gen_n;
        spec.edge_probability = config.gen_p.value_or(0.0);
        spec.exponent = config.gen_gamma.value_or(0.0);
        spec.seed = seed;
        base = generate(spec);
    } else {
        EdgeListLoadResult loaded = load_edge_list(config.dataset_path);
        base = std::move(loaded.graph);
        std::ofstream labels_out(dir / "labels.txt", std::ios::binary);
        if (!labels_out) throw IoError("cannot write " + (dir / "labels.txt").string());
        for (std::size_t id = 0; id < loaded.labels.size(); ++id)
            labels_out << id << ' ' << loaded.labels[id] << '\n';
        summary.push_back(tag + "loaded " + config.dataset_path + ": n=" +
                          std::to_string(base.node_count()) + " m=" +
                          std::to_string(base.edge_count()) + " (" +
                          std::to_string(loaded.duplicate_edges) + " duplicates, " +
                          std::to_string(loaded.self_loops) + " self-loops dropped)");
    }
    if (base.node_count() < 2)
        throw ConfigError("graph needs at least 2 nodes, got " +
                          std::to_string(base.node_count()));

    const TransactionMatrices tallies =
        config.transactions_path.empty()
            ? generate_transactions(base, seed, config.trans_min, config.trans_max)
            : load_transactions_csv(config.transactions_path, base.node_count());
    const TrustProfile trust = trust_profile(tallies);
    const Graph weighted = weigh_graph(base, trust);
    save_edge_list(weighted, (dir / "pre_attack.edges").string());

    AttackSpec attack_spec;
    attack_spec.mode = config.attack_mode;
    attack_spec.target_components = *config.target_components;
    attack_spec.seed = seed;
    attack_spec.max_removals = config.max_removals;
    AttackResult attacked;
    try {
        attacked = fragment(weighted, attack_spec);
    } catch (const AttackFailedError& e) {
        // Keep the partial trace around for diagnosis before giving up.
        save_attack_trace_csv(e.partial_trace, (dir / "attack_trace.csv").string());
        throw;
    }
    save_edge_list(attacked.graph, (dir / "fragmented.edges").string());
    save_attack_trace_csv(attacked.trace, (dir / "attack_trace.csv").string());
    summary.push_back(tag + "n=" + std::to_string(weighted.node_count()) + " m=" +
                      std::to_string(weighted.edge_count()) + ", fragmented to " +
                      std::to_string(components(attacked.graph).count()) + " components in " +
                      std::to_string(attacked.trace.size()) + " removals");

    const bool want_strategic = config.mechanism != MechanismChoice::Budget;
    const bool want_budget = config.mechanism != MechanismChoice::Strategic;

    if (want_strategic) {
        Rng rng = make_rng(seed, stream::restore);
        const RestoreResult restored =
            strategic_restore(attacked.graph, trust, rng, config.restore);
        save_edge_list(restored.graph, (dir / "restored_strategic.edges").string());
        save_rewire_plan_csv(restored.plan, (dir / "rewire_plan.csv").string());
        MetricsSeries series;
        append_attack_rows(series, weighted, attacked.trace, Mechanism::Strategic);
        append_plan_rows(series, restored.plan, Mechanism::Strategic);
        series.emit_csv((dir / "metrics_strategic.csv").string());
        series.emit_json((dir / "metrics_strategic.json").string());
        const PlanTally t = tally(restored.plan);
        summary.push_back(tag + "strategic: " + std::to_string(restored.plan.size()) + " steps (" +
                          std::to_string(t.adds) + " adds, " + std::to_string(t.rewires) +
                          " rewires), " + final_state(restored.graph));
    }

    if (want_budget) {
        Rng rng = make_rng(seed, stream::restore);
        const BudgetRestoreResult restored =
            budget_restore(attacked.graph, trust, config.budget, rng, config.restore);
        save_edge_list(restored.graph, (dir / "restored_budget.edges").string());
        if (!want_strategic)
            save_rewire_plan_csv(restored.plan, (dir / "rewire_plan.csv").string());
        save_budget_schedule_csv(restored.schedule, (dir / "budget_schedule.csv").string());
        MetricsSeries series;
        append_attack_rows(series, weighted, attacked.trace, Mechanism::Budget);
        append_schedule_rows(series, restored.schedule);
        series.emit_csv((dir / "metrics_budget.csv").string());
        series.emit_json((dir / "metrics_budget.json").string());
        summary.push_back(tag + "budget B=" +
                          detail::format_real(restored.schedule.total_budget) + ": " +
                          std::to_string(restored.schedule.executions.size()) + " of " +
                          std::to_string(restored.plan.size()) + " plan entries executed, " +
                          final_state(restored.graph));
    }

    if (config.random_baseline) {
        Rng rng = make_rng(seed, stream::baseline);
        const RestoreResult restored = random_restore(attacked.graph, trust, rng, config.restore);
        save_edge_list(restored.graph, (dir / "restored_random.edges").string());
        save_rewire_plan_csv(restored.plan, (dir / "rewire_plan_random.csv").string());
        MetricsSeries series;
        append_attack_rows(series, weighted, attacked.trace, Mechanism::Random);
        append_plan_rows(series, restored.plan, Mechanism::Random);
        series.emit_csv((dir / "metrics_random.csv").string());
        series.emit_json((dir / "metrics_random.json").string());
        summary.push_back(tag + "random baseline: " + std::to_string(restored.plan.size()) +
                          " steps, " + final_state(restored.graph));
    }
    return summary;
}

}  // namespace

std::vector<std::string> run_pipeline(const RunConfig& config) {
    config.validate();
    if (config.repeats == 1) return run_single(config, *config.seed, config.out_dir);

    std::vector<std::vector<std::string>> results(config.repeats);
    std::vector<std::exception_ptr> failures(config.repeats);
    std::vector<std::thread> workers;
    workers.reserve(config.repeats);
    for (std::size_t i = 0; i < config.repeats; ++i) {
        workers.emplace_back([&, i] {
            const std::uint64_t seed = *config.seed + i;
            try {
                results[i] = run_single(config, seed,
                                        fs::path(config.out_dir) /
                                            ("seed_" + std::to_string(seed)));
            } catch (...) {
                failures[i] = std::current_exception();
            }
        });
    }
    for (std::thread& w : workers) w.join();
    for (const std::exception_ptr& failure : failures)
        if (failure) std::rethrow_exception(failure);

    std::vector<std::string> summary;
    for (std::vector<std::string>& lines : results)
        for (std::string& line : lines) summary.push_back(std::move(line));
    return summary;
}

std::string metrics_json_for_file(const std::string& path) {
    const EdgeListLoadResult loaded = load_edge_list(path);
    const Graph& g = loaded.graph;
    if (g.node_count() < 2)
        throw ConfigError("graph in " + path + " needs at least 2 nodes, got " +
                          std::to_string(g.node_count()));
    const ComponentPartition parts = components(g);
    const Graph lcc = g.induced_subgraph(parts.lcc());
    std::ostringstream out;
    out << "{\"n\": " << g.node_count() << ", \"m\": " << g.edge_count()
        << ", \"L_E\": " << detail::format_real(laplacian_energy_fast(lcc));
    if (g.node_count() <= 2000)
        out << ", \"L_E_spectral\": " << detail::format_real(laplacian_energy_spectral(lcc));
    out << ", \"S\": " << detail::format_real(robustness_index(g))
        << ", \"rho\": " << detail::format_real(density(g)) << "}\n";
    return out.str();
}

}  // namespace netmend

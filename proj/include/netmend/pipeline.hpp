#pragma once

/// End-to-end run orchestration: build or load a graph, weigh it from trust
/// values, fragment it, restore it, and write every artifact of the run into
/// an output directory. Identical config + seed produces byte-identical
/// artifacts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netmend/attack.hpp"
#include "netmend/generators.hpp"
#include "netmend/restore.hpp"

namespace netmend {

enum class MechanismChoice { Strategic, Budget, Both };

struct RunConfig {
    // Graph source: exactly one of a generator kind or a dataset path.
    std::optional<GeneratorSpec::Kind> gen_kind;
    std::optional<std::size_t> gen_n;
    std::optional<double> gen_p;      // ER only
    std::optional<double> gen_gamma;  // power-law only
    std::string dataset_path;

    // Transaction source: a CSV log, or synthesized counts in
    // [trans_min, trans_max] per edge.
    std::string transactions_path;
    std::uint64_t trans_min = 1;
    std::uint64_t trans_max = 10;

    AttackMode attack_mode = AttackMode::Random;
    std::optional<std::size_t> target_components;  // q; required
    std::optional<std::size_t> max_removals;

    MechanismChoice mechanism = MechanismChoice::Both;
    std::optional<double> budget;  // empty = auto (full plan cost)
    bool random_baseline = false;

    RestoreOptions restore;

    std::optional<std::uint64_t> seed;  // required; never defaulted from the clock
    std::size_t repeats = 1;
    std::string out_dir = "out";

    /// Throws ConfigError on missing or inconsistent settings.
    void validate() const;
};

/// Applies one `key = value` setting. Shared by the config-file reader and
/// the CLI flag layer; throws ConfigError on unknown keys or bad values.
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

/// Reads a flat `key = value` file with `#` comments.
RunConfig parse_config_file(const std::string& path);

/// Runs the configured pipeline. With repeats == 1 artifacts land directly in
/// out_dir; otherwise each run writes to out_dir/seed_<s>/ with consecutive
/// seeds, executed concurrently. Returns human-readable summary lines.
std::vector<std::string> run_pipeline(const RunConfig& config);

/// Metric summary of a stored edge list as a JSON object: n, m, L_E (plus a
/// spectral cross-check for graphs up to 2000 nodes), S, rho.
std::string metrics_json_for_file(const std::string& path);

}  // namespace netmend

#include <cstdlib>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "netmend/errors.hpp"
#include "netmend/pipeline.hpp"

namespace {

int cmd_run(netmend::RunConfig config) {
    if (const char* env = std::getenv("NETMEND_OUT"); env != nullptr && *env != '\0')
        config.out_dir = env;
    for (const std::string& line : netmend::run_pipeline(config)) std::cout << line << '\n';
    return 0;
}

int cmd_metrics(const std::string& path) {
    std::cout << netmend::metrics_json_for_file(path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"netmend: fragment networks by edge removal and repair them with priced rewiring"};
    app.require_subcommand(1);

    CLI::App* run = app.add_subcommand("run", "execute a full attack/restore pipeline");
    std::string config_path;
    run->add_option("--config", config_path, "flat key=value config file; flags override it");
    // Every flag funnels through the same key=value channel as the config
    // file, so the two layers cannot drift apart.
    std::vector<std::pair<std::string, CLI::Option*>> forwarded;
    auto forward = [&](const std::string& flag, const std::string& key, const std::string& desc) {
        forwarded.emplace_back(key, run->add_option(flag, desc)->expected(1));
    };
    forward("--gen", "gen", "generator kind: er or power-law");
    forward("--n", "n", "node count for generated graphs");
    forward("--p", "p", "edge probability (er)");
    forward("--gamma", "gamma", "degree exponent > 2 (power-law)");
    forward("--dataset", "dataset", "edge-list file to load instead of generating");
    forward("--transactions", "transactions", "transaction CSV (i,j,successes,failures)");
    forward("--trans-min", "trans-min", "minimum synthesized transactions per edge (default 1)");
    forward("--trans-max", "trans-max", "maximum synthesized transactions per edge (default 10)");
    forward("--attack", "attack", "attack mode: random (default) or targeted");
    forward("--q", "q", "stop the attack at this many components (required)");
    forward("--max-removals", "max-removals", "abort the attack after this many removals");
    forward("--mechanism", "mechanism", "strategic, budget, or both (default both)");
    forward("--budget", "budget", "total budget, or auto for the full plan cost (default auto)");
    forward("--baseline", "baseline", "none (default) or random, for a comparison restore");
    forward("--threshold", "threshold", "rewire when the LCC has more edges than: n (default) or n-1");
    forward("--tie-break", "tie-break", "seeded (default) or deterministic");
    forward("--seed", "seed", "run seed (required; runs are reproducible)");
    forward("--repeats", "repeats", "run this many consecutive seeds concurrently");
    forward("--out", "out", "output directory (default out; NETMEND_OUT overrides)");

    CLI::App* metrics = app.add_subcommand("metrics", "print metric summary of an edge list");
    std::string metrics_path;
    metrics->add_option("graph", metrics_path, "edge-list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are config errors
    }

    try {
        if (run->parsed()) {
            netmend::RunConfig config;
            if (!config_path.empty()) config = netmend::parse_config_file(config_path);
            for (const auto& [key, option] : forwarded)
                for (const std::string& value : option->results())
                    netmend::apply_config_entry(config, key, value);
            return cmd_run(std::move(config));
        }
        return cmd_metrics(metrics_path);
    } catch (const netmend::AttackFailedError& e) {
        std::cerr << "attack failed: " << e.what() << '\n';
        return 3;
    } catch (const netmend::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const netmend::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const netmend::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
}

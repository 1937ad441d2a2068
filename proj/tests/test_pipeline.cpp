#include <sys/wait.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "netmend/errors.hpp"
#include "netmend/metrics_report.hpp"
#include "netmend/pipeline.hpp"
#include "support/builders.hpp"

using namespace netmend;
using test::read_file;
using test::TempDir;
using test::write_file;

namespace fs = std::filesystem;

namespace {

RunConfig small_er_config(const std::string& out_dir) {
    RunConfig config;
    config.gen_kind = GeneratorSpec::Kind::ErdosRenyi;
    config.gen_n = 40;
    config.gen_p = 0.15;
    config.target_components = 4;
    config.seed = 5;
    config.random_baseline = true;
    config.out_dir = out_dir;
    return config;
}

const std::vector<std::string>& full_run_artifacts() {
    static const std::vector<std::string> names{
        "pre_attack.edges",    "fragmented.edges",        "attack_trace.csv",
        "restored_strategic.edges", "rewire_plan.csv",    "metrics_strategic.csv",
        "metrics_strategic.json",   "restored_budget.edges", "budget_schedule.csv",
        "metrics_budget.csv",  "metrics_budget.json",     "restored_random.edges",
        "rewire_plan_random.csv",   "metrics_random.csv",  "metrics_random.json"};
    return names;
}

struct CliResult {
    int code = -1;
    std::string output;
};

std::string shell_quote(const std::string& s) {
    std::string quoted = "'";
    for (char c : s) {
        if (c == '\'')
            quoted += "'\\''";
        else
            quoted += c;
    }
    quoted += "'";
    return quoted;
}

CliResult run_cli(const std::vector<std::string>& args, const std::string& env_prefix = "") {
    static std::atomic<unsigned> counter{0};
    const fs::path capture =
        fs::temp_directory_path() / ("netmend_cli_" + std::to_string(::getpid()) + "_" +
                                     std::to_string(counter.fetch_add(1)) + ".out");
    std::string cmd = env_prefix + shell_quote(NETMEND_CLI_PATH);
    for (const std::string& arg : args) cmd += " " + shell_quote(arg);
    cmd += " >" + shell_quote(capture.string()) + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult result;
    if (WIFEXITED(status)) result.code = WEXITSTATUS(status);
    result.output = read_file(capture.string());
    fs::remove(capture);
    return result;
}

}  // namespace

TEST_CASE("config entries parse into typed fields") {
    RunConfig config;
    apply_config_entry(config, "gen", "er");
    CHECK(config.gen_kind == GeneratorSpec::Kind::ErdosRenyi);
    apply_config_entry(config, "gen", "power_law");
    CHECK(config.gen_kind == GeneratorSpec::Kind::PowerLaw);
    apply_config_entry(config, "n", "500");
    CHECK(config.gen_n == 500);
    apply_config_entry(config, "gamma", "2.7");
    CHECK(config.gen_gamma == doctest::Approx(2.7));
    apply_config_entry(config, "attack", "targeted");
    CHECK(config.attack_mode == AttackMode::Targeted);
    apply_config_entry(config, "q", "15");
    CHECK(config.target_components == 15);
    apply_config_entry(config, "mechanism", "budget");
    CHECK(config.mechanism == MechanismChoice::Budget);
    apply_config_entry(config, "budget", "12.5");
    CHECK(config.budget == doctest::Approx(12.5));
    apply_config_entry(config, "budget", "auto");
    CHECK_FALSE(config.budget.has_value());
    apply_config_entry(config, "baseline", "random");
    CHECK(config.random_baseline);
    apply_config_entry(config, "threshold", "n-1");
    CHECK(config.restore.threshold == RewireThreshold::TotalNodesMinusOne);
    apply_config_entry(config, "tie-break", "deterministic");
    CHECK(config.restore.tie_break == TieBreak::Deterministic);
    apply_config_entry(config, "seed", "77");
    CHECK(config.seed == 77);
    apply_config_entry(config, "out", "results");
    CHECK(config.out_dir == "results");

    CHECK_THROWS_AS(apply_config_entry(config, "flavor", "sour"), ConfigError);
    CHECK_THROWS_AS(apply_config_entry(config, "gen", "scale-free"), ConfigError);
    CHECK_THROWS_AS(apply_config_entry(config, "attack", "nuclear"), ConfigError);
    CHECK_THROWS_AS(apply_config_entry(config, "n", "12x"), ConfigError);
    CHECK_THROWS_AS(apply_config_entry(config, "p", "0.5.1"), ConfigError);
    CHECK_THROWS_AS(apply_config_entry(config, "repeats", "0"), ConfigError);
}

TEST_CASE("config files allow comments and report line numbers on errors") {
    TempDir dir;
    const std::string path = dir.file("run.conf");
    write_file(path,
               "# synthetic run\n"
               "gen = er\n"
               "n = 50   # inline comment\n"
               "p = 0.1\n"
               "\n"
               "q = 4\n"
               "seed = 9\n");
    const RunConfig config = parse_config_file(path);
    CHECK(config.gen_kind == GeneratorSpec::Kind::ErdosRenyi);
    CHECK(config.gen_n == 50);
    CHECK(config.gen_p == doctest::Approx(0.1));
    CHECK(config.target_components == 4);
    CHECK(config.seed == 9);
    CHECK_NOTHROW(config.validate());

    write_file(path, "gen = er\nnonsense line\n");
    try {
        parse_config_file(path);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }

    write_file(path, "gen = er\nn = 50\nq = one\n");
    try {
        parse_config_file(path);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config_file(dir.file("absent.conf")), IoError);
}

TEST_CASE("config validation rejects inconsistent settings") {
    const auto expect_reject = [](void (*tweak)(RunConfig&)) {
        RunConfig config;
        config.gen_kind = GeneratorSpec::Kind::ErdosRenyi;
        config.gen_n = 30;
        config.gen_p = 0.2;
        config.target_components = 3;
        config.seed = 1;
        tweak(config);
        CHECK_THROWS_AS(config.validate(), ConfigError);
    };
    expect_reject([](RunConfig& c) { c.seed.reset(); });
    expect_reject([](RunConfig& c) { c.dataset_path = "x.edges"; });  // two sources
    expect_reject([](RunConfig& c) { c.gen_kind.reset(); });          // no source
    expect_reject([](RunConfig& c) { c.gen_p.reset(); });             // er needs p
    expect_reject([](RunConfig& c) { c.gen_gamma = 2.5; });           // gamma on er
    expect_reject([](RunConfig& c) { c.gen_n.reset(); });
    expect_reject([](RunConfig& c) { c.target_components.reset(); });
    expect_reject([](RunConfig& c) { c.target_components = 1; });
    expect_reject([](RunConfig& c) { c.trans_min = 5, c.trans_max = 2; });
    expect_reject([](RunConfig& c) { c.budget = 0.0; });
    expect_reject([](RunConfig& c) { c.out_dir.clear(); });

    RunConfig power;
    power.gen_kind = GeneratorSpec::Kind::PowerLaw;
    power.gen_n = 30;
    power.target_components = 3;
    power.seed = 1;
    CHECK_THROWS_AS(power.validate(), ConfigError);  // gamma missing
    power.gen_gamma = 2.5;
    CHECK_NOTHROW(power.validate());
    power.gen_p = 0.1;
    CHECK_THROWS_AS(power.validate(), ConfigError);  // p on power-law

    RunConfig dataset;
    dataset.dataset_path = "graph.edges";
    dataset.target_components = 3;
    dataset.seed = 1;
    CHECK_NOTHROW(dataset.validate());
    dataset.gen_n = 10;
    CHECK_THROWS_AS(dataset.validate(), ConfigError);  // n on dataset
}

TEST_CASE("a full pipeline run writes every artifact deterministically") {
    TempDir dir;
    const std::string out_a = (dir.path() / "a").string();
    const std::string out_b = (dir.path() / "b").string();

    const std::vector<std::string> summary = run_pipeline(small_er_config(out_a));
    CHECK(summary.size() == 4);  // fragment line + three mechanism lines
    for (const std::string& name : full_run_artifacts())
        CHECK_MESSAGE(fs::exists(fs::path(out_a) / name), name);

    run_pipeline(small_er_config(out_b));
    for (const std::string& name : full_run_artifacts())
        CHECK_MESSAGE(read_file((fs::path(out_a) / name).string()) ==
                          read_file((fs::path(out_b) / name).string()),
                      name);
}

TEST_CASE("run metrics tell a coherent attack-then-restore story") {
    TempDir dir;
    const std::string out = (dir.path() / "run").string();
    run_pipeline(small_er_config(out));

    const std::vector<MetricsRow> rows =
        load_metrics_csv((fs::path(out) / "metrics_strategic.csv").string());
    REQUIRE(!rows.empty());
    bool seen_restore = false;
    double restore_s = 0.0;
    for (const MetricsRow& row : rows) {
        CHECK(row.mechanism == Mechanism::Strategic);
        if (row.phase == Phase::Restore) {
            seen_restore = true;
            CHECK(row.robustness >= restore_s - 1e-12);
            restore_s = row.robustness;
        } else {
            CHECK_FALSE(seen_restore);  // all attack rows precede restore rows
        }
    }
    REQUIRE(seen_restore);
    CHECK(rows.back().robustness == 1.0);  // strategic restoration finishes the job

    const std::vector<MetricsRow> budget_rows =
        load_metrics_csv((fs::path(out) / "metrics_budget.csv").string());
    CHECK(budget_rows.back().robustness == 1.0);  // auto budget funds the whole plan
}

TEST_CASE("repeated runs fan out into per-seed directories") {
    TempDir dir;
    RunConfig config = small_er_config((dir.path() / "multi").string());
    config.random_baseline = false;
    config.repeats = 2;
    const std::vector<std::string> summary = run_pipeline(config);
    CHECK(summary.size() == 6);  // three lines per seed
    CHECK(fs::exists(dir.path() / "multi" / "seed_5" / "restored_strategic.edges"));
    CHECK(fs::exists(dir.path() / "multi" / "seed_6" / "restored_strategic.edges"));

    // The seed_5 run matches a single run with the same seed.
    TempDir single_dir;
    RunConfig single = small_er_config(single_dir.file("one"));
    single.random_baseline = false;
    run_pipeline(single);
    CHECK(read_file((dir.path() / "multi" / "seed_5" / "restored_strategic.edges").string()) ==
          read_file((fs::path(single_dir.file("one")) / "restored_strategic.edges").string()));
}

TEST_CASE("dataset runs keep the label mapping and transaction log") {
    TempDir dir;
    const std::string edges = dir.file("campus.edges");
    write_file(edges,
               "alice bob\n"
               "bob carol\n"
               "carol alice\n"
               "dave erin\n");
    const std::string transactions = dir.file("log.csv");
    write_file(transactions, "0,1,8,2\n1,2,1,3\n");

    RunConfig config;
    config.dataset_path = edges;
    config.transactions_path = transactions;
    config.target_components = 2;
    config.seed = 3;
    config.mechanism = MechanismChoice::Strategic;
    config.out_dir = (dir.path() / "out").string();
    const std::vector<std::string> summary = run_pipeline(config);

    REQUIRE(!summary.empty());
    CHECK(summary.front().find("loaded") != std::string::npos);
    CHECK(read_file((fs::path(config.out_dir) / "labels.txt").string()) ==
          "0 alice\n1 bob\n2 carol\n3 dave\n4 erin\n");
    CHECK(fs::exists(fs::path(config.out_dir) / "restored_strategic.edges"));
    CHECK_FALSE(fs::exists(fs::path(config.out_dir) / "restored_budget.edges"));
}

TEST_CASE("metric summaries of stored graphs") {
    TempDir dir;
    const std::string path = dir.file("path3.edges");
    write_file(path, "0 1\n1 2\n");
    const nlohmann::json parsed = nlohmann::json::parse(metrics_json_for_file(path));
    CHECK(parsed["n"].get<int>() == 3);
    CHECK(parsed["m"].get<int>() == 2);
    CHECK(parsed["L_E"].get<double>() == doctest::Approx(14.0 / 9.0).epsilon(1e-5));
    CHECK(parsed["L_E_spectral"].get<double>() == doctest::Approx(14.0 / 9.0).epsilon(1e-5));
    CHECK(parsed["S"].get<double>() == 1.0);
    CHECK(parsed["rho"].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-5));

    const std::string tiny = dir.file("tiny.edges");
    write_file(tiny, "a a\n");  // one node after the self-loop drops
    CHECK_THROWS_AS(metrics_json_for_file(tiny), ConfigError);
    CHECK_THROWS_AS(metrics_json_for_file(dir.file("absent.edges")), IoError);
}

TEST_CASE("CLI rejects bad invocations with exit code 2") {
    CHECK(run_cli({}).code == 2);  // a subcommand is required
    CHECK(run_cli({"run", "--bogus"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);

    const CliResult no_seed = run_cli({"run", "--gen", "er", "--n", "20", "--p", "0.2",  //
                                       "--q", "3", "--out", "/tmp/netmend_unused"});
    CHECK(no_seed.code == 2);
    CHECK(no_seed.output.find("seed") != std::string::npos);
}

TEST_CASE("CLI metrics subcommand prints the summary JSON") {
    TempDir dir;
    const std::string path = dir.file("ring.edges");
    write_file(path, "0 1\n1 2\n2 3\n3 4\n0 4\n");
    const CliResult result = run_cli({"metrics", path});
    CHECK(result.code == 0);
    const nlohmann::json parsed = nlohmann::json::parse(result.output);
    CHECK(parsed["n"].get<int>() == 5);
    CHECK(parsed["L_E"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(parsed["S"].get<double>() == 1.0);

    const std::string empty = dir.file("empty.edges");
    write_file(empty, "");
    CHECK(run_cli({"metrics", empty}).code == 2);
    CHECK(run_cli({"metrics", dir.file("no_such.edges")}).code == 2);
}

TEST_CASE("CLI reports an impossible attack with exit code 3") {
    TempDir dir;
    const std::string out = dir.file("failed_run");
    const CliResult result =
        run_cli({"run", "--gen", "er", "--n", "30", "--p", "0.5", "--q", "25",  //
                 "--max-removals", "3", "--seed", "4", "--out", out});
    CHECK(result.code == 3);
    CHECK(result.output.find("attack failed") != std::string::npos);
    // The partial trace is kept for diagnosis.
    CHECK(fs::exists(fs::path(out) / "attack_trace.csv"));
    CHECK_FALSE(fs::exists(fs::path(out) / "restored_strategic.edges"));
}

TEST_CASE("CLI runs the pipeline end to end") {
    TempDir dir;
    const std::string out = dir.file("cli_run");
    const CliResult result =
        run_cli({"run", "--gen", "er", "--n", "40", "--p", "0.15", "--q", "4",  //
                 "--seed", "5", "--baseline", "random", "--out", out});
    CHECK(result.code == 0);
    CHECK(result.output.find("strategic:") != std::string::npos);
    for (const std::string& name : full_run_artifacts())
        CHECK_MESSAGE(fs::exists(fs::path(out) / name), name);

    // Flags and the library API drive the identical run.
    TempDir lib_dir;
    const std::string lib_out = lib_dir.file("lib_run");
    run_pipeline(small_er_config(lib_out));
    for (const std::string& name : full_run_artifacts())
        CHECK(read_file((fs::path(out) / name).string()) ==
              read_file((fs::path(lib_out) / name).string()));
}

TEST_CASE("NETMEND_OUT overrides the configured output directory") {
    TempDir dir;
    const std::string flag_out = dir.file("ignored");
    const std::string env_out = dir.file("actual");
    const CliResult result =
        run_cli({"run", "--gen", "er", "--n", "30", "--p", "0.2", "--q", "3",  //
                 "--mechanism", "strategic", "--seed", "2", "--out", flag_out},
                "NETMEND_OUT=" + shell_quote(env_out) + " ");
    CHECK(result.code == 0);
    CHECK(fs::exists(fs::path(env_out) / "restored_strategic.edges"));
    CHECK_FALSE(fs::exists(fs::path(flag_out)));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "combgape/experiment.hpp"

using namespace combgape;
using namespace combgape::harness;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig tiny_custom_config() {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::CustomActions;
    cfg.actions = {{1.0, 0.0}, {0.0, 1.0}};
    cfg.mu = {1.0, 0.2};
    cfg.delta = 0.1;
    cfg.n_trials = 6;
    cfg.base_seed = 99;
    return cfg;
}

}  // namespace

TEST_CASE("minimal config gets defaults") {
    const std::string path = write_temp(
        "combgape_min.json",
        R"({"experiment": "knapsack", "d": 5, "n_trials": 30, "base_seed": 7})");
    const ExperimentConfig cfg = load_config(path);
    CHECK(cfg.experiment == ExperimentKind::Knapsack);
    CHECK(cfg.d == 5);
    CHECK(cfg.n_trials == 30);
    CHECK(cfg.base_seed == 7);
    CHECK(cfg.delta == 0.05);
    CHECK(cfg.R == 1.0);
    CHECK(cfg.budget_cap == 10000000);
    CHECK(cfg.strategies ==
          std::vector<StrategyKind>{StrategyKind::GapWeighted, StrategyKind::NaiveLeastPulled});
    CHECK(cfg.noise == NoiseSpec::gaussian_unit());
    CHECK(!cfg.fixed_instance);
    CHECK(!cfg.audit.event_E);
}

TEST_CASE("config validation errors name the field") {
    const std::string bad_delta = write_temp(
        "combgape_bad_delta.json",
        R"({"experiment": "knapsack", "d": 5, "delta": 1.5})");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_config(bad_delta)), doctest::Contains("delta"),
                         std::runtime_error);

    const std::string no_d = write_temp("combgape_no_d.json", R"({"experiment": "knapsack"})");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_config(no_d)), doctest::Contains("d"),
                         std::runtime_error);

    const std::string unknown = write_temp(
        "combgape_unknown.json", R"({"experiment": "knapsack", "d": 5, "dleta": 0.1})");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_config(unknown)), doctest::Contains("dleta"),
                         std::runtime_error);

    const std::string no_gap = write_temp(
        "combgape_no_gap.json",
        R"({"experiment": "knapsack", "d": 5, "strategies": ["naive_least_pulled"]})");
    CHECK_THROWS_WITH_AS(static_cast<void>(load_config(no_gap)), doctest::Contains("strategies"),
                         std::runtime_error);

    const std::string garbage = write_temp("combgape_garbage.json", "{not json");
    CHECK_THROWS_AS(static_cast<void>(load_config(garbage)), std::runtime_error);
}

TEST_CASE("config round-trips through serialization") {
    const std::string path = write_temp(
        "combgape_rt.json",
        R"({"experiment": "transport", "cost_matrix_path": "m.csv", "n_trials": 3,
            "base_seed": 11, "delta": 0.2, "noise": {"gaussian_scaled": 0.7},
            "audit": {"event_e": true}, "fixed_instance": true})");
    const ExperimentConfig cfg = load_config(path);
    const std::string out = write_temp("combgape_rt2.json", "");
    save_config(cfg, out);
    const ExperimentConfig reloaded = load_config(out);
    CHECK(cfg == reloaded);
}

TEST_CASE("sample statistics use the n-1 denominator") {
    const std::vector<double> taus{10.0, 20.0, 30.0};
    CHECK(mean_of(taus) == doctest::Approx(20.0));
    CHECK(sample_std(taus) == doctest::Approx(10.0));
    CHECK(sample_std(std::vector<double>{5.0}) == 0.0);
}

TEST_CASE("a single noise-free trial reproduces the deterministic run") {
    ExperimentConfig cfg = tiny_custom_config();
    cfg.n_trials = 1;
    cfg.noise = NoiseSpec::disabled();
    cfg.strategies = {StrategyKind::GapWeighted};
    const ResultTable table = run_experiment(cfg);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].misidentifications == 0);
    CHECK(table.rows[0].budget_exhausted == 0);
    CHECK(table.rows[0].std_tau == 0.0);
    CHECK(table.rows[0].ratio_to_gapweighted == 1.0);

    ActionClass actions(cfg.actions);
    BanditInstance instance{cfg.mu, cfg.R, cfg.noise, derive_seed(cfg.base_seed, 100, 0)};
    const RunRecord record = run(instance, actions, cfg.delta, StrategyKind::GapWeighted);
    CHECK(table.rows[0].mean_tau == doctest::Approx(static_cast<double>(record.tau)));
}

TEST_CASE("repeated runs of one config agree byte for byte") {
    const ExperimentConfig cfg = tiny_custom_config();
    const ResultTable a = run_experiment(cfg);
    const ResultTable b = run_experiment(cfg);
    CHECK(a == b);
    CHECK(results_to_csv(a) == results_to_csv(b));
    CHECK(results_to_json(a).dump() == results_to_json(b).dump());
}

TEST_CASE("worker count does not change the table") {
    ExperimentConfig cfg = tiny_custom_config();
    cfg.n_trials = 8;
    const ResultTable serial = run_experiment(cfg, 1);
    const ResultTable parallel = run_experiment(cfg, 4);
    CHECK(serial == parallel);
    CHECK(results_to_csv(serial) == results_to_csv(parallel));
}

TEST_CASE("knapsack batches prefer the gap-weighted strategy") {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::Knapsack;
    cfg.d = 5;
    cfg.n_trials = 5;
    cfg.base_seed = 41;
    cfg.delta = 0.05;
    const ResultTable table = run_experiment(cfg);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].strategy == StrategyKind::GapWeighted);
    CHECK(table.rows[0].ratio_to_gapweighted == 1.0);
    CHECK(table.rows[1].ratio_to_gapweighted > 1.0);
    CHECK(table.rows[0].n_trials == 5);
    CHECK(!table.instance_fingerprint.empty());
    CHECK(table.version == std::string("0.1.0"));
}

TEST_CASE("budget-exhausted trials are excluded and flagged") {
    ExperimentConfig cfg = tiny_custom_config();
    cfg.budget_cap = 2;  // equals d: every trial exhausts right after initialization
    // noise off and a gap far below the initial radius, so B > 0 surely
    cfg.noise = NoiseSpec::disabled();
    cfg.mu = {0.3, 0.2};
    cfg.strategies = {StrategyKind::GapWeighted};
    const ResultTable table = run_experiment(cfg);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].budget_exhausted == cfg.n_trials);
    CHECK(table.rows[0].misidentifications == 0);
    CHECK(std::isnan(table.rows[0].mean_tau));
    REQUIRE(table.unreliable.size() == 1);
    CHECK(table.unreliable[0] == "gap_weighted");
    // accounting: every trial is either used or exhausted
    CHECK(table.rows[0].n_trials == table.rows[0].budget_exhausted + 0);
}

TEST_CASE("fixed_instance pins one instance across trials") {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::Knapsack;
    cfg.d = 4;
    cfg.n_trials = 3;
    cfg.base_seed = 17;
    cfg.fixed_instance = true;
    cfg.strategies = {StrategyKind::GapWeighted};
    const ResultTable pinned = run_experiment(cfg);
    cfg.fixed_instance = false;
    const ResultTable redrawn = run_experiment(cfg);
    // fingerprints hash per-trial instances, so pinning changes the fingerprint
    CHECK(pinned.instance_fingerprint != redrawn.instance_fingerprint);
}

TEST_CASE("csv output has the exact column layout") {
    ExperimentConfig cfg = tiny_custom_config();
    cfg.strategies = {StrategyKind::GapWeighted};
    const ResultTable table = run_experiment(cfg);
    const std::string csv = results_to_csv(table);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "strategy,n_trials,mean_tau,std_tau,ratio_to_gapweighted,misidentifications,"
          "budget_exhausted");
    std::string row;
    std::getline(lines, row);
    CHECK(row.substr(0, 13) == "gap_weighted,");
    std::string rest;
    CHECK(!std::getline(lines, rest));  // one strategy, one data row
}

TEST_CASE("json results round-trip") {
    ExperimentConfig cfg = tiny_custom_config();
    cfg.audit.event_E = true;
    const ResultTable table = run_experiment(cfg);

    const std::string path = "/tmp/combgape_results.json";
    emit_results(table, ResultFormat::Json, path);
    const nlohmann::json doc = nlohmann::json::parse(slurp(path));
    const ResultTable parsed = parse_results_json(doc);

    CHECK(parsed.config == table.config);
    CHECK(parsed.instance_fingerprint == table.instance_fingerprint);
    CHECK(parsed.audit == table.audit);
    REQUIRE(parsed.rows.size() == table.rows.size());
    for (std::size_t i = 0; i < parsed.rows.size(); ++i) {
        CHECK(parsed.rows[i].strategy == table.rows[i].strategy);
        CHECK(parsed.rows[i].mean_tau == round_sig6(table.rows[i].mean_tau));
        CHECK(parsed.rows[i].misidentifications == table.rows[i].misidentifications);
    }
    // emitting the parsed table reproduces the file byte for byte
    const std::string again = "/tmp/combgape_results2.json";
    emit_results(parsed, ResultFormat::Json, again);
    CHECK(slurp(path) == slurp(again));
}

TEST_CASE("emit_results fails loudly on an unwritable path") {
    const ResultTable table{};
    CHECK_THROWS_WITH_AS(emit_results(table, ResultFormat::Csv, "/nonexistent_dir/out.csv"),
                         doctest::Contains("/nonexistent_dir/out.csv"), std::runtime_error);
}

TEST_CASE("audited runs report coverage statistics") {
    ExperimentConfig cfg = tiny_custom_config();
    cfg.audit.event_E = true;
    cfg.audit.lemma2 = true;
    cfg.n_trials = 10;
    cfg.strategies = {StrategyKind::GapWeighted};
    const ResultTable table = run_experiment(cfg);
    CHECK(table.audit.event_E_audited == 10);
    CHECK(table.audit.lemma2_audited == 10);
    CHECK(table.audit.event_E_failures <= 1);  // delta = 0.1; typically zero
}

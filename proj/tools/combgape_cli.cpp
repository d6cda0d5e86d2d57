#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "combgape/environment.hpp"
#include "combgape/experiment.hpp"
#include "combgape/generators.hpp"
#include "combgape/hardness.hpp"
#include "combgape/knapsack.hpp"
#include "combgape/rng.hpp"
#include "combgape/transport.hpp"
#include "combgape/version.hpp"

namespace {

using namespace combgape;

harness::ResultFormat format_for_path(const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        return harness::ResultFormat::Json;
    }
    return harness::ResultFormat::Csv;
}

void print_table(const harness::ResultTable& table) {
    std::printf("%-20s %9s %14s %14s %8s %7s %10s\n", "strategy", "n_trials", "mean_tau",
                "std_tau", "ratio", "misid", "exhausted");
    for (const harness::StrategyRow& row : table.rows) {
        std::printf("%-20s %9zu %14.6g %14.6g %8.4g %7zu %10zu\n",
                    harness::strategy_name(row.strategy).c_str(), row.n_trials, row.mean_tau,
                    row.std_tau, row.ratio_to_gapweighted, row.misidentifications,
                    row.budget_exhausted);
    }
    std::printf("instance fingerprint: %s\n", table.instance_fingerprint.c_str());
    for (const std::string& name : table.unreliable) {
        std::printf("warning: %s exceeded 10%% budget exhaustion; its statistics are unreliable\n",
                    name.c_str());
    }
}

void print_audit(const harness::AuditSummary& audit) {
    std::printf("confidence-event audit: %zu runs, %zu failures\n", audit.event_E_audited,
                audit.event_E_failures);
    std::printf("pull-threshold audit:   %zu runs, %zu with violations "
                "(%zu violations in runs where the event held)\n",
                audit.lemma2_audited, audit.lemma2_runs_with_violations,
                audit.lemma2_violations_in_event_E_runs);
}

// Instance used by analyze: the same one trial 0 of a batch would see.
std::pair<ActionClass, std::vector<double>> instance_for_analysis(
    const harness::ExperimentConfig& cfg) {
    Rng rng(derive_seed(cfg.base_seed, 1, 0));
    switch (cfg.experiment) {
        case harness::ExperimentKind::Knapsack: {
            auto gen = oracles::generate_knapsack_experiment(
                cfg.d, rng, cfg.n_action_samples ? cfg.n_action_samples : 100);
            return {std::move(gen.actions), std::move(gen.mu)};
        }
        case harness::ExperimentKind::Transport: {
            const oracles::CostMatrix matrix = oracles::load_cost_matrix(cfg.cost_matrix_path);
            auto gen = oracles::generate_transport_experiment(
                matrix, rng, cfg.n_action_samples ? cfg.n_action_samples : 1000);
            return {std::move(gen.actions), std::move(gen.mu)};
        }
        case harness::ExperimentKind::CustomActions:
            return {ActionClass(cfg.actions), cfg.mu};
    }
    throw std::logic_error("unknown experiment kind");
}

int cmd_run(const std::string& config_path, std::size_t workers) {
    const harness::ExperimentConfig cfg = harness::load_config(config_path);
    const harness::ResultTable table = harness::run_experiment(cfg, workers);
    harness::emit_results(table, format_for_path(cfg.output_path), cfg.output_path);
    print_table(table);
    std::printf("results written to %s\n", cfg.output_path.c_str());
    return 0;
}

int cmd_audit(const std::string& config_path, std::size_t workers) {
    harness::ExperimentConfig cfg = harness::load_config(config_path);
    cfg.audit.event_E = true;
    cfg.audit.lemma2 = true;
    const harness::ResultTable table = harness::run_experiment(cfg, workers);
    harness::emit_results(table, format_for_path(cfg.output_path), cfg.output_path);
    print_table(table);
    print_audit(table.audit);
    std::printf("results written to %s\n", cfg.output_path.c_str());
    return 0;
}

int cmd_analyze(const std::string& config_path, double C) {
    const harness::ExperimentConfig cfg = harness::load_config(config_path);
    const auto [actions, mu] = instance_for_analysis(cfg);
    const std::size_t a_star = best_action(actions, mu);
    const analysis::HardnessProfile profile = analysis::compute_hardness_profile(actions, mu);

    std::printf("actions: %zu, arms: %zu, best action index: %zu\n", actions.num_actions(),
                actions.num_arms(), a_star);
    std::printf("%6s %14s %14s\n", "arm", "gap", "V_s");
    for (std::size_t s = 0; s < profile.delta_s.size(); ++s) {
        std::printf("%6zu %14.6g %14.6g\n", s, profile.delta_s[s], profile.v_s[s]);
    }
    std::printf("amplification A: %.6g\n", profile.amplification);
    std::printf("sum 1/gap^2:     %.6g\n", profile.lb_sum);
    std::printf("sum V_s/gap^2:   %.6g\n", profile.thm2_sum);
    std::printf("sample-complexity bound (C = %.6g): %.6g\n", C,
                analysis::theorem2_bound(profile, cfg.R, actions.num_actions(), cfg.delta, C));
    return 0;
}

int cmd_oracle_knapsack(const std::string& spec_path) {
    std::ifstream in(spec_path);
    if (!in) throw std::runtime_error("cannot open knapsack spec: " + spec_path);
    nlohmann::json doc;
    in >> doc;
    oracles::KnapsackSpec spec;
    spec.weights = doc.at("weights").get<std::vector<int>>();
    spec.values = doc.at("values").get<std::vector<double>>();
    spec.capacity = doc.at("capacity").get<int>();
    const std::vector<int> counts = oracles::solve_unbounded_knapsack(spec);
    std::printf("counts:");
    for (int c : counts) std::printf(" %d", c);
    std::printf("\nvalue: %.10g\n", oracles::knapsack_value(spec.values, counts));
    return 0;
}

std::vector<double> parse_csv_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string field = text.substr(pos, comma - pos);
        out.push_back(std::stod(field));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int cmd_oracle_transport(const std::string& csv_path, const std::string& supply_csv,
                         const std::string& demand_csv) {
    const oracles::CostMatrix matrix = oracles::load_cost_matrix(csv_path);
    oracles::TransportSpec spec;
    spec.m = matrix.m;
    spec.n = matrix.n;
    spec.cost = matrix.cost;
    if (supply_csv.empty()) {
        spec.supply.assign(matrix.m, 1.0 / static_cast<double>(matrix.m));
    } else {
        spec.supply = parse_csv_list(supply_csv);
    }
    if (demand_csv.empty()) {
        spec.demand.assign(matrix.n, 1.0 / static_cast<double>(matrix.n));
    } else {
        spec.demand = parse_csv_list(demand_csv);
    }
    const oracles::TransportSolution sol = oracles::solve_transport_detailed(spec);
    std::printf("plan:\n");
    for (std::size_t i = 0; i < spec.m; ++i) {
        for (std::size_t j = 0; j < spec.n; ++j) {
            std::printf("%s%.6g", j ? "," : "", sol.plan[i * spec.n + j]);
        }
        std::printf("\n");
    }
    std::printf("cost: %.10g\npivots: %zu\n", sol.cost, sol.pivots);
    return 0;
}

int cli_main(int argc, char** argv) {
    CLI::App app{"CombGapE: best-action identification for real-valued combinatorial bandits"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string config_path;
    std::size_t workers = 0;
    double C = 1.0;
    std::string spec_path;
    std::string supply_csv, demand_csv;

    CLI::App* run_cmd = app.add_subcommand("run", "run a batch experiment from a JSON config");
    run_cmd->add_option("config", config_path, "experiment config (JSON)")->required();
    run_cmd->add_option("--workers", workers, "worker threads (default: COMBGAPE_WORKERS)");

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "print the hardness profile of the configured instance");
    analyze_cmd->add_option("config", config_path, "experiment config (JSON)")->required();
    analyze_cmd->add_option("--c", C, "constant C in the sample-complexity bound (default 1)");

    CLI::App* audit_cmd =
        app.add_subcommand("audit", "run with the confidence-event and pull-threshold audits on");
    audit_cmd->add_option("config", config_path, "experiment config (JSON)")->required();
    audit_cmd->add_option("--workers", workers, "worker threads (default: COMBGAPE_WORKERS)");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "offline solver passthrough");
    oracle_cmd->require_subcommand(1);
    CLI::App* kp_cmd = oracle_cmd->add_subcommand("knapsack", "solve a knapsack spec (JSON)");
    kp_cmd->add_option("spec", spec_path, "{\"weights\": [...], \"values\": [...], \"capacity\": W}")
        ->required();
    CLI::App* tr_cmd =
        oracle_cmd->add_subcommand("transport", "solve a transport instance (cost-matrix CSV)");
    tr_cmd->add_option("cost", spec_path, "cost matrix CSV")->required();
    tr_cmd->add_option("--supply", supply_csv, "comma-separated supplies (default: uniform)");
    tr_cmd->add_option("--demand", demand_csv, "comma-separated demands (default: uniform)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(config_path, workers);
        if (analyze_cmd->parsed()) return cmd_analyze(config_path, C);
        if (audit_cmd->parsed()) return cmd_audit(config_path, workers);
        if (oracle_cmd->parsed()) {
            if (kp_cmd->parsed()) return cmd_oracle_knapsack(spec_path);
            if (tr_cmd->parsed()) return cmd_oracle_transport(spec_path, supply_csv, demand_csv);
        }
        std::cerr << app.help() << std::flush;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) { return cli_main(argc, argv); }

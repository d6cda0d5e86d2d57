#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "combgape/algorithm.hpp"
#include "combgape/environment.hpp"

namespace combgape::harness {

enum class ExperimentKind { Knapsack, Transport, CustomActions };

std::string experiment_name(ExperimentKind kind);
std::string strategy_name(StrategyKind kind);

struct AuditFlags {
    bool event_E = false;
    bool lemma2 = false;

    bool operator==(const AuditFlags&) const = default;
};

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Knapsack;
    std::size_t d = 0;                         // Knapsack: item count
    std::string cost_matrix_path;              // Transport
    std::vector<std::vector<double>> actions;  // CustomActions
    std::vector<double> mu;                    // CustomActions
    double delta = 0.05;
    double R = 1.0;
    std::size_t n_trials = 1;
    std::uint64_t base_seed = 0;
    std::vector<StrategyKind> strategies{StrategyKind::GapWeighted,
                                         StrategyKind::NaiveLeastPulled};
    std::size_t n_action_samples = 0;  // 0: per-experiment default (100 / 1000)
    std::uint64_t budget_cap = 10'000'000;
    AuditFlags audit;
    NoiseSpec noise = NoiseSpec::gaussian_unit();
    // false: every trial regenerates the instance from its own derived seed;
    // true: all trials share the instance derived from trial 0
    bool fixed_instance = false;
    std::string output_path = "results.csv";

    bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig load_config(const std::string& path);
nlohmann::json config_to_json(const ExperimentConfig& config);
void save_config(const ExperimentConfig& config, const std::string& path);

struct StrategyRow {
    StrategyKind strategy = StrategyKind::GapWeighted;
    std::size_t n_trials = 0;
    double mean_tau = 0.0;
    double std_tau = 0.0;
    double ratio_to_gapweighted = 1.0;
    std::size_t misidentifications = 0;
    std::size_t budget_exhausted = 0;

    bool operator==(const StrategyRow&) const = default;
};

struct AuditSummary {
    std::size_t event_E_audited = 0;
    std::size_t event_E_failures = 0;
    std::size_t lemma2_audited = 0;
    std::size_t lemma2_runs_with_violations = 0;
    std::size_t lemma2_violations_in_event_E_runs = 0;

    bool operator==(const AuditSummary&) const = default;
};

struct ResultTable {
    std::vector<StrategyRow> rows;
    ExperimentConfig config;
    std::string instance_fingerprint;  // hash of every trial's action class and mu
    std::string version;
    AuditSummary audit;
    std::vector<std::string> unreliable;  // rows with > 10% budget exhaustion

    bool operator==(const ResultTable&) const = default;
};

// Batch protocol: per trial, an instance (fresh or pinned per the config) and
// one independent reward stream per strategy; trials run in parallel but the
// table is aggregated in trial order, so any worker count yields the same
// result. Budget-exhausted trials are excluded from the stopping-time and
// accuracy statistics and reported in their own column.
ResultTable run_experiment(const ExperimentConfig& config, std::size_t n_workers = 0);

enum class ResultFormat { Csv, Json };

std::string results_to_csv(const ResultTable& table);
nlohmann::json results_to_json(const ResultTable& table);
ResultTable parse_results_json(const nlohmann::json& doc);
void emit_results(const ResultTable& table, ResultFormat format, const std::string& path);

// round toward the 6-significant-digit decimal used in emitted files
double round_sig6(double x);

double mean_of(std::span<const double> xs);
// sample standard deviation (n-1 denominator); 0 for fewer than two samples
double sample_std(std::span<const double> xs);

}

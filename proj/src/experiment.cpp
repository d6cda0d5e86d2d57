#include "combgape/experiment.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "combgape/audit.hpp"
#include "combgape/errors.hpp"
#include "combgape/generators.hpp"
#include "combgape/hardness.hpp"
#include "combgape/rng.hpp"
#include "combgape/version.hpp"

namespace combgape::harness {

using nlohmann::json;

namespace {

constexpr std::uint64_t kTagInstance = 1;
constexpr std::uint64_t kTagRewards = 100;  // + strategy index

constexpr std::size_t kDefaultKnapsackSamples = 100;
constexpr std::size_t kDefaultTransportSamples = 1000;

[[noreturn]] void config_error(const std::string& field, const std::string& what) {
    throw std::runtime_error("config error at '" + field + "': " + what);
}

double require_number(const json& j, const std::string& field) {
    if (!j.is_number()) config_error(field, "expected a number");
    return j.get<double>();
}

std::uint64_t require_uint(const json& j, const std::string& field) {
    if (!j.is_number_unsigned()) config_error(field, "expected a nonnegative integer");
    return j.get<std::uint64_t>();
}

StrategyKind parse_strategy(const std::string& name, const std::string& field) {
    if (name == "gap_weighted") return StrategyKind::GapWeighted;
    if (name == "naive_least_pulled") return StrategyKind::NaiveLeastPulled;
    config_error(field, "unknown strategy '" + name + "'");
}

NoiseSpec parse_noise(const json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "gaussian_unit") return NoiseSpec::gaussian_unit();
        if (name == "disabled") return NoiseSpec::disabled();
        config_error("noise", "unknown noise '" + name + "'");
    }
    if (j.is_object() && j.contains("gaussian_scaled")) {
        const double sigma = require_number(j.at("gaussian_scaled"), "noise.gaussian_scaled");
        if (!(sigma > 0.0)) config_error("noise.gaussian_scaled", "sigma must be positive");
        return NoiseSpec::gaussian_scaled(sigma);
    }
    config_error("noise", "expected \"gaussian_unit\", \"disabled\" or {\"gaussian_scaled\": s}");
}

json noise_to_json(const NoiseSpec& noise) {
    switch (noise.kind) {
        case NoiseSpec::Kind::GaussianUnit: return "gaussian_unit";
        case NoiseSpec::Kind::Disabled: return "disabled";
        case NoiseSpec::Kind::GaussianScaled: return json{{"gaussian_scaled", noise.sigma}};
    }
    throw std::logic_error("noise_to_json: unknown kind");
}

void validate_config(const ExperimentConfig& cfg) {
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0)) config_error("delta", "must be in (0,1)");
    if (!(cfg.R > 0.0)) config_error("R", "must be positive");
    if (cfg.n_trials < 1) config_error("n_trials", "must be >= 1");
    if (cfg.strategies.empty()) config_error("strategies", "must be nonempty");
    bool has_gap_weighted = false;
    for (StrategyKind s : cfg.strategies) {
        if (s == StrategyKind::GapWeighted) has_gap_weighted = true;
    }
    if (!has_gap_weighted) {
        config_error("strategies",
                     "must include gap_weighted (the normalization baseline of the table)");
    }
    switch (cfg.experiment) {
        case ExperimentKind::Knapsack:
            if (cfg.d < 2) config_error("d", "knapsack experiments need d >= 2");
            break;
        case ExperimentKind::Transport:
            if (cfg.cost_matrix_path.empty()) {
                config_error("cost_matrix_path", "required for transport experiments");
            }
            break;
        case ExperimentKind::CustomActions:
            if (cfg.actions.size() < 2) config_error("actions", "need at least 2 actions");
            if (cfg.mu.size() < 2) config_error("mu", "need at least 2 arms");
            break;
    }
}

std::size_t resolved_action_samples(const ExperimentConfig& cfg) {
    if (cfg.n_action_samples > 0) return cfg.n_action_samples;
    return cfg.experiment == ExperimentKind::Transport ? kDefaultTransportSamples
                                                       : kDefaultKnapsackSamples;
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

struct InstanceBundle {
    ActionClass actions;
    std::vector<double> mu;
    std::size_t a_star = 0;
    std::uint64_t hash = 0;
};

std::uint64_t hash_instance(const ActionClass& actions, std::span<const double> mu) {
    std::uint64_t h = kFnvOffset;
    const std::uint64_t K = actions.num_actions();
    const std::uint64_t d = actions.num_arms();
    h = fnv1a(h, &K, sizeof K);
    h = fnv1a(h, &d, sizeof d);
    h = fnv1a(h, actions.flat().data(), actions.flat().size() * sizeof(double));
    h = fnv1a(h, mu.data(), mu.size() * sizeof(double));
    return h;
}

InstanceBundle generate_once(const ExperimentConfig& cfg, const oracles::CostMatrix* cost_matrix,
                             std::uint64_t seed) {
    Rng rng(seed);
    switch (cfg.experiment) {
        case ExperimentKind::Knapsack: {
            auto gen = oracles::generate_knapsack_experiment(cfg.d, rng,
                                                             resolved_action_samples(cfg));
            const std::size_t star = best_action(gen.actions, gen.mu);
            const std::uint64_t h = hash_instance(gen.actions, gen.mu);
            return InstanceBundle{std::move(gen.actions), std::move(gen.mu), star, h};
        }
        case ExperimentKind::Transport: {
            auto gen = oracles::generate_transport_experiment(*cost_matrix, rng,
                                                              resolved_action_samples(cfg));
            const std::size_t star = best_action(gen.actions, gen.mu);
            const std::uint64_t h = hash_instance(gen.actions, gen.mu);
            return InstanceBundle{std::move(gen.actions), std::move(gen.mu), star, h};
        }
        case ExperimentKind::CustomActions: {
            ActionClass actions(cfg.actions);
            if (cfg.mu.size() != actions.num_arms()) {
                config_error("mu", "length must match the action dimension");
            }
            const std::size_t star = best_action(actions, cfg.mu);
            const std::uint64_t h = hash_instance(actions, cfg.mu);
            return InstanceBundle{std::move(actions), cfg.mu, star, h};
        }
    }
    throw std::logic_error("make_instance: unknown experiment kind");
}

// A draw whose action class collapses to a single vector, or whose best
// action ties, cannot support identification; discard it and redraw from the
// next seed in the trial's derivation chain. Deterministic, so any worker
// count sees the same instances.
InstanceBundle make_instance(const ExperimentConfig& cfg,
                             const oracles::CostMatrix* cost_matrix, std::uint64_t inst_index) {
    constexpr std::uint64_t kRedraws = 20;
    for (std::uint64_t attempt = 0;; ++attempt) {
        try {
            return generate_once(cfg, cost_matrix,
                                 derive_seed(cfg.base_seed, kTagInstance + attempt, inst_index));
        } catch (const DegenerateInstance&) {
            if (cfg.experiment == ExperimentKind::CustomActions || attempt + 1 >= kRedraws) {
                throw;
            }
        }
    }
}

struct StrategyOutcome {
    std::uint64_t tau = 0;
    bool stopped = false;
    bool correct = false;
    bool event_E_audited = false;
    bool event_E_held = false;
    bool lemma2_audited = false;
    std::size_t lemma2_violations = 0;
};

struct TrialOutcome {
    std::uint64_t instance_hash = 0;
    std::vector<StrategyOutcome> per_strategy;
};

TrialOutcome run_trial(const ExperimentConfig& cfg, const oracles::CostMatrix* cost_matrix,
                       const InstanceBundle* shared_instance, std::uint64_t trial_index) {
    std::optional<InstanceBundle> own;
    const InstanceBundle& inst =
        shared_instance ? *shared_instance
                        : own.emplace(make_instance(cfg, cost_matrix, trial_index));
    const std::size_t a_star = inst.a_star;
    std::optional<analysis::HardnessProfile> profile;
    if (cfg.audit.lemma2) profile = analysis::compute_hardness_profile(inst.actions, inst.mu);

    TrialOutcome outcome;
    outcome.instance_hash = inst.hash;
    outcome.per_strategy.resize(cfg.strategies.size());
    for (std::size_t si = 0; si < cfg.strategies.size(); ++si) {
        BanditInstance bandit{inst.mu, cfg.R, cfg.noise,
                              derive_seed(cfg.base_seed, kTagRewards + si, trial_index)};
        RunOptions options;
        options.budget_cap = cfg.budget_cap;
        options.keep_full_trace = cfg.audit.lemma2;
        options.keep_snapshots = true;
        const RunRecord record = run(bandit, inst.actions, cfg.delta, cfg.strategies[si], options);

        StrategyOutcome& so = outcome.per_strategy[si];
        so.tau = record.tau;
        so.stopped = record.terminated_by == Termination::Stopped;
        so.correct = so.stopped && record.a_out == a_star;
        if (cfg.audit.event_E) {
            const AuditReport report =
                audit_event_E(record.snapshots, inst.actions, inst.mu, cfg.delta, cfg.R);
            so.event_E_audited = true;
            so.event_E_held = report.event_E_held;
        }
        if (cfg.audit.lemma2) {
            so.lemma2_audited = true;
            so.lemma2_violations =
                analysis::audit_lemma2(record, *profile, cfg.R, inst.actions.num_actions(),
                                       cfg.delta)
                    .size();
        }
    }
    return outcome;
}

std::size_t resolve_workers(std::size_t n_workers, std::size_t n_trials) {
    std::size_t workers = n_workers;
    if (workers == 0) {
        if (const char* env = std::getenv("COMBGAPE_WORKERS")) {
            char* end = nullptr;
            const unsigned long parsed = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && parsed >= 1) workers = parsed;
        }
    }
    if (workers == 0) workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    return std::min(workers, n_trials);
}

std::string format_sig6(double x) {
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

}  // namespace

double round_sig6(double x) {
    if (std::isnan(x) || std::isinf(x)) return x;
    return std::strtod(format_sig6(x).c_str(), nullptr);
}

double mean_of(std::span<const double> xs) {
    if (xs.empty()) return std::nan("");
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double sample_std(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean_of(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

std::string experiment_name(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::Knapsack: return "knapsack";
        case ExperimentKind::Transport: return "transport";
        case ExperimentKind::CustomActions: return "custom_actions";
    }
    throw std::logic_error("experiment_name: unknown kind");
}

std::string strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::GapWeighted: return "gap_weighted";
        case StrategyKind::NaiveLeastPulled: return "naive_least_pulled";
    }
    throw std::logic_error("strategy_name: unknown kind");
}

ExperimentConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw std::runtime_error("config error: document must be an object");
    static const char* known[] = {"experiment",       "d",           "cost_matrix_path",
                                  "actions",          "mu",          "delta",
                                  "R",                "n_trials",    "base_seed",
                                  "strategies",       "n_action_samples",
                                  "budget_cap",       "audit",       "noise",
                                  "fixed_instance",   "output_path"};
    for (const auto& [key, value] : doc.items()) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) config_error(key, "unknown field");
    }

    ExperimentConfig cfg;
    if (!doc.contains("experiment")) config_error("experiment", "required");
    const std::string kind = doc.at("experiment").get<std::string>();
    if (kind == "knapsack") {
        cfg.experiment = ExperimentKind::Knapsack;
    } else if (kind == "transport") {
        cfg.experiment = ExperimentKind::Transport;
    } else if (kind == "custom_actions") {
        cfg.experiment = ExperimentKind::CustomActions;
    } else {
        config_error("experiment", "unknown experiment '" + kind + "'");
    }

    if (doc.contains("d")) cfg.d = require_uint(doc.at("d"), "d");
    if (doc.contains("cost_matrix_path")) {
        cfg.cost_matrix_path = doc.at("cost_matrix_path").get<std::string>();
    }
    if (doc.contains("actions")) {
        cfg.actions = doc.at("actions").get<std::vector<std::vector<double>>>();
    }
    if (doc.contains("mu")) cfg.mu = doc.at("mu").get<std::vector<double>>();
    if (doc.contains("delta")) cfg.delta = require_number(doc.at("delta"), "delta");
    if (doc.contains("R")) cfg.R = require_number(doc.at("R"), "R");
    if (doc.contains("n_trials")) cfg.n_trials = require_uint(doc.at("n_trials"), "n_trials");
    if (doc.contains("base_seed")) cfg.base_seed = require_uint(doc.at("base_seed"), "base_seed");
    if (doc.contains("strategies")) {
        if (!doc.at("strategies").is_array()) config_error("strategies", "expected an array");
        cfg.strategies.clear();
        for (const auto& s : doc.at("strategies")) {
            cfg.strategies.push_back(parse_strategy(s.get<std::string>(), "strategies"));
        }
    }
    // 0 keeps the per-experiment default (100 knapsack, 1000 transport)
    if (doc.contains("n_action_samples")) {
        cfg.n_action_samples = require_uint(doc.at("n_action_samples"), "n_action_samples");
    }
    if (doc.contains("budget_cap")) {
        cfg.budget_cap = require_uint(doc.at("budget_cap"), "budget_cap");
        if (cfg.budget_cap < 2) config_error("budget_cap", "must be >= 2");
    }
    if (doc.contains("audit")) {
        const json& a = doc.at("audit");
        if (!a.is_object()) config_error("audit", "expected an object");
        for (const auto& [key, value] : a.items()) {
            if (key == "event_e") {
                cfg.audit.event_E = value.get<bool>();
            } else if (key == "lemma2") {
                cfg.audit.lemma2 = value.get<bool>();
            } else {
                config_error("audit." + key, "unknown field");
            }
        }
    }
    if (doc.contains("noise")) cfg.noise = parse_noise(doc.at("noise"));
    if (doc.contains("fixed_instance")) cfg.fixed_instance = doc.at("fixed_instance").get<bool>();
    if (doc.contains("output_path")) cfg.output_path = doc.at("output_path").get<std::string>();

    validate_config(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config parse error in " + path + ": " + e.what());
    }
    return parse_config(doc);
}

json config_to_json(const ExperimentConfig& cfg) {
    json doc;
    doc["experiment"] = experiment_name(cfg.experiment);
    if (cfg.experiment == ExperimentKind::Knapsack) doc["d"] = cfg.d;
    if (cfg.experiment == ExperimentKind::Transport) {
        doc["cost_matrix_path"] = cfg.cost_matrix_path;
    }
    if (cfg.experiment == ExperimentKind::CustomActions) {
        doc["actions"] = cfg.actions;
        doc["mu"] = cfg.mu;
    }
    doc["delta"] = cfg.delta;
    doc["R"] = cfg.R;
    doc["n_trials"] = cfg.n_trials;
    doc["base_seed"] = cfg.base_seed;
    json strategies = json::array();
    for (StrategyKind s : cfg.strategies) strategies.push_back(strategy_name(s));
    doc["strategies"] = strategies;
    doc["n_action_samples"] = cfg.n_action_samples;
    doc["budget_cap"] = cfg.budget_cap;
    doc["audit"] = json{{"event_e", cfg.audit.event_E}, {"lemma2", cfg.audit.lemma2}};
    doc["noise"] = noise_to_json(cfg.noise);
    doc["fixed_instance"] = cfg.fixed_instance;
    doc["output_path"] = cfg.output_path;
    return doc;
}

void save_config(const ExperimentConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write config: " + path);
    out << config_to_json(cfg).dump(2) << "\n";
}

ResultTable run_experiment(const ExperimentConfig& cfg, std::size_t n_workers) {
    validate_config(cfg);

    std::optional<oracles::CostMatrix> cost_matrix;
    if (cfg.experiment == ExperimentKind::Transport) {
        cost_matrix = oracles::load_cost_matrix(cfg.cost_matrix_path);
    }
    const oracles::CostMatrix* matrix = cost_matrix ? &*cost_matrix : nullptr;

    std::optional<InstanceBundle> shared;
    if (cfg.fixed_instance || cfg.experiment == ExperimentKind::CustomActions) {
        shared = make_instance(cfg, matrix, 0);
    }
    const InstanceBundle* shared_ptr = shared ? &*shared : nullptr;

    std::vector<TrialOutcome> outcomes(cfg.n_trials);
    {
        const std::size_t workers = resolve_workers(n_workers, cfg.n_trials);
        std::atomic<std::size_t> next{0};
        std::mutex error_mutex;
        std::exception_ptr first_error;

        auto worker = [&] {
            for (;;) {
                const std::size_t trial = next.fetch_add(1);
                if (trial >= cfg.n_trials) return;
                try {
                    outcomes[trial] = run_trial(cfg, matrix, shared_ptr, trial);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        };

        if (workers <= 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
            for (std::thread& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);
    }

    ResultTable table;
    table.config = cfg;
    table.version = kVersion;

    std::uint64_t fingerprint = kFnvOffset;
    for (const TrialOutcome& outcome : outcomes) {
        fingerprint = fnv1a(fingerprint, &outcome.instance_hash, sizeof outcome.instance_hash);
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fingerprint));
    table.instance_fingerprint = hex;

    table.rows.resize(cfg.strategies.size());
    for (std::size_t si = 0; si < cfg.strategies.size(); ++si) {
        StrategyRow& row = table.rows[si];
        row.strategy = cfg.strategies[si];
        row.n_trials = cfg.n_trials;

        std::vector<double> taus;
        taus.reserve(cfg.n_trials);
        for (const TrialOutcome& outcome : outcomes) {
            const StrategyOutcome& so = outcome.per_strategy[si];
            if (so.event_E_audited) {
                table.audit.event_E_audited += 1;
                if (!so.event_E_held) table.audit.event_E_failures += 1;
            }
            if (so.lemma2_audited) {
                table.audit.lemma2_audited += 1;
                if (so.lemma2_violations > 0) {
                    table.audit.lemma2_runs_with_violations += 1;
                    if (so.event_E_audited && so.event_E_held) {
                        table.audit.lemma2_violations_in_event_E_runs += so.lemma2_violations;
                    }
                }
            }
            if (!so.stopped) {
                row.budget_exhausted += 1;
                continue;
            }
            taus.push_back(static_cast<double>(so.tau));
            if (!so.correct) row.misidentifications += 1;
        }

        row.mean_tau = mean_of(taus);
        row.std_tau = taus.empty() ? std::nan("") : sample_std(taus);
        if (row.budget_exhausted * 10 > cfg.n_trials) {
            table.unreliable.push_back(strategy_name(row.strategy));
        }
    }

    double gap_weighted_mean = std::nan("");
    for (const StrategyRow& row : table.rows) {
        if (row.strategy == StrategyKind::GapWeighted) gap_weighted_mean = row.mean_tau;
    }
    for (StrategyRow& row : table.rows) {
        row.ratio_to_gapweighted = row.strategy == StrategyKind::GapWeighted
                                       ? 1.0
                                       : row.mean_tau / gap_weighted_mean;
    }
    return table;
}

std::string results_to_csv(const ResultTable& table) {
    std::string out =
        "strategy,n_trials,mean_tau,std_tau,ratio_to_gapweighted,misidentifications,"
        "budget_exhausted\n";
    for (const StrategyRow& row : table.rows) {
        out += strategy_name(row.strategy);
        out += ',' + std::to_string(row.n_trials);
        out += ',' + format_sig6(row.mean_tau);
        out += ',' + format_sig6(row.std_tau);
        out += ',' + format_sig6(row.ratio_to_gapweighted);
        out += ',' + std::to_string(row.misidentifications);
        out += ',' + std::to_string(row.budget_exhausted);
        out += '\n';
    }
    return out;
}

json results_to_json(const ResultTable& table) {
    json rows = json::array();
    for (const StrategyRow& row : table.rows) {
        rows.push_back(json{{"strategy", strategy_name(row.strategy)},
                            {"n_trials", row.n_trials},
                            {"mean_tau", round_sig6(row.mean_tau)},
                            {"std_tau", round_sig6(row.std_tau)},
                            {"ratio_to_gapweighted", round_sig6(row.ratio_to_gapweighted)},
                            {"misidentifications", row.misidentifications},
                            {"budget_exhausted", row.budget_exhausted}});
    }
    json audit{{"event_e_audited", table.audit.event_E_audited},
               {"event_e_failures", table.audit.event_E_failures},
               {"lemma2_audited", table.audit.lemma2_audited},
               {"lemma2_runs_with_violations", table.audit.lemma2_runs_with_violations},
               {"lemma2_violations_in_event_e_runs",
                table.audit.lemma2_violations_in_event_E_runs}};
    json metadata{{"config", config_to_json(table.config)},
                  {"instance_fingerprint", table.instance_fingerprint},
                  {"version", table.version},
                  {"audit", audit},
                  {"unreliable", table.unreliable}};
    return json{{"rows", rows}, {"metadata", metadata}};
}

ResultTable parse_results_json(const json& doc) {
    ResultTable table;
    const json& metadata = doc.at("metadata");
    table.config = parse_config(metadata.at("config"));
    table.instance_fingerprint = metadata.at("instance_fingerprint").get<std::string>();
    table.version = metadata.at("version").get<std::string>();
    const json& audit = metadata.at("audit");
    table.audit.event_E_audited = audit.at("event_e_audited").get<std::size_t>();
    table.audit.event_E_failures = audit.at("event_e_failures").get<std::size_t>();
    table.audit.lemma2_audited = audit.at("lemma2_audited").get<std::size_t>();
    table.audit.lemma2_runs_with_violations =
        audit.at("lemma2_runs_with_violations").get<std::size_t>();
    table.audit.lemma2_violations_in_event_E_runs =
        audit.at("lemma2_violations_in_event_e_runs").get<std::size_t>();
    table.unreliable = metadata.at("unreliable").get<std::vector<std::string>>();

    for (const json& r : doc.at("rows")) {
        StrategyRow row;
        row.strategy = parse_strategy(r.at("strategy").get<std::string>(), "rows.strategy");
        row.n_trials = r.at("n_trials").get<std::size_t>();
        row.mean_tau = r.at("mean_tau").is_null() ? std::nan("") : r.at("mean_tau").get<double>();
        row.std_tau = r.at("std_tau").is_null() ? std::nan("") : r.at("std_tau").get<double>();
        row.ratio_to_gapweighted = r.at("ratio_to_gapweighted").is_null()
                                       ? std::nan("")
                                       : r.at("ratio_to_gapweighted").get<double>();
        row.misidentifications = r.at("misidentifications").get<std::size_t>();
        row.budget_exhausted = r.at("budget_exhausted").get<std::size_t>();
        table.rows.push_back(row);
    }
    return table;
}

void emit_results(const ResultTable& table, ResultFormat format, const std::string& path) {
    std::string payload;
    if (format == ResultFormat::Csv) {
        payload = results_to_csv(table);
    } else {
        payload = results_to_json(table).dump(2);
        payload += '\n';
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write results: " + path);
    out << payload;
    if (!out) throw std::runtime_error("failed writing results: " + path);
}

}

#include "combgape/algorithm.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace combgape {

namespace {

void check_distinct_pair(const ActionClass& actions, std::size_t i, std::size_t j) {
    if (i >= actions.num_actions() || j >= actions.num_actions()) {
        throw std::out_of_range("action index out of range");
    }
    if (i == j) throw std::invalid_argument("arm selection needs two distinct actions");
}

HistorySnapshot snapshot_of(const ArmHistory& history) {
    return HistorySnapshot{history.t, history.counts, history.means};
}

}  // namespace

AmbiguousPair select_ambiguous_action(const ActionClass& actions, const ArmHistory& history,
                                      double delta, double R) {
    const std::size_t K = actions.num_actions();
    const std::size_t d = actions.num_arms();
    if (history.num_arms() != d) {
        throw std::invalid_argument("select_ambiguous_action: history size mismatch");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("select_ambiguous_action: delta must be in (0,1)");
    }
    if (!(R > 0.0)) throw std::invalid_argument("select_ambiguous_action: R must be positive");
    for (std::size_t s = 0; s < d; ++s) {
        if (history.counts[s] == 0) {
            throw std::invalid_argument("select_ambiguous_action: every arm needs one pull");
        }
    }

    std::size_t i = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < K; ++k) {
        const auto pk = actions.row(k);
        double value = 0.0;
        for (std::size_t s = 0; s < d; ++s) value += history.means[s] * pk[s];
        if (value > best_value) {
            best_value = value;
            i = k;
        }
    }

    // Fused challenger scan; term order matches estimated_gap and
    // confidence_radius exactly, so the result is bit-identical to composing
    // the public functions.
    const double Kd = static_cast<double>(K);
    const double td = static_cast<double>(history.t);
    const double log_term = std::log(2.0 * Kd * Kd * td * td / delta);
    const auto pi = actions.row(i);

    AmbiguousPair out;
    out.i = i;
    double best_upper = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < K; ++j) {
        if (j == i) continue;
        const auto pj = actions.row(j);
        double gap = 0.0;
        double weighted_inverse_counts = 0.0;
        for (std::size_t s = 0; s < d; ++s) {
            const double diff = pj[s] - pi[s];
            gap += history.means[s] * diff;
            if (diff != 0.0) {
                weighted_inverse_counts += diff * diff / static_cast<double>(history.counts[s]);
            }
        }
        const double beta = weighted_inverse_counts == 0.0
                                ? 0.0
                                : R * std::sqrt(0.5 * weighted_inverse_counts * log_term);
        const double upper = gap + beta;
        if (upper > best_upper) {
            best_upper = upper;
            out.j = j;
        }
    }
    out.B = best_upper;
    return out;
}

std::size_t select_arm_gap_weighted(const ActionClass& actions, std::size_t i, std::size_t j,
                                    std::span<const std::uint64_t> counts) {
    check_distinct_pair(actions, i, j);
    const auto pi = actions.row(i);
    const auto pj = actions.row(j);
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        if (counts[s] == 0) {
            throw std::invalid_argument("select_arm_gap_weighted: every arm needs one pull");
        }
        const double diff = pi[s] - pj[s];
        const double ts = static_cast<double>(counts[s]);
        const double score = diff * diff / (ts * (ts + 1.0));
        if (score > best_score) {
            best_score = score;
            best = s;
        }
    }
    return best;
}

std::size_t select_arm_naive(const ActionClass& actions, std::size_t i, std::size_t j,
                             std::span<const std::uint64_t> counts) {
    check_distinct_pair(actions, i, j);
    const auto pi = actions.row(i);
    const auto pj = actions.row(j);
    bool found = false;
    std::size_t best = 0;
    std::uint64_t fewest = 0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        if (std::fabs(pi[s] - pj[s]) <= kCoordinateTol) continue;
        if (!found || counts[s] < fewest) {
            found = true;
            best = s;
            fewest = counts[s];
        }
    }
    if (!found) throw std::invalid_argument("select_arm_naive: the two actions do not differ");
    return best;
}

RunRecord run(const BanditInstance& instance, const ActionClass& actions, double delta,
              StrategyKind strategy, const RunOptions& options) {
    instance.validate();
    const std::size_t d = actions.num_arms();
    if (instance.mu.size() != d) throw std::invalid_argument("run: mu length mismatch");
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("run: delta must be in (0,1)");
    if (options.budget_cap < d) throw std::invalid_argument("run: budget_cap below arm count");

    Rng rng(instance.seed);
    ArmHistory history(d);
    RunRecord record;

    // initialization phase: one pull per arm
    for (std::size_t s = 0; s < d; ++s) {
        history.add(s, sample_reward(instance, s, rng));
    }

    std::uint64_t next_checkpoint = static_cast<std::uint64_t>(d);
    if (options.keep_snapshots) {
        record.snapshots.push_back(snapshot_of(history));
        next_checkpoint *= 2;
    }

    for (;;) {
        const AmbiguousPair pair = select_ambiguous_action(actions, history, delta, instance.R);
        if (pair.B <= 0.0) {
            record.terminated_by = Termination::Stopped;
            record.a_out = pair.i;
            break;
        }
        if (history.t >= options.budget_cap) {
            record.terminated_by = Termination::BudgetExhausted;
            record.a_out = pair.i;
            break;
        }
        const std::size_t p = strategy == StrategyKind::GapWeighted
                                  ? select_arm_gap_weighted(actions, pair.i, pair.j, history.counts)
                                  : select_arm_naive(actions, pair.i, pair.j, history.counts);
        if (options.keep_full_trace) {
            record.trace.push_back(TraceStep{history.t, static_cast<std::uint32_t>(pair.i),
                                             static_cast<std::uint32_t>(pair.j), pair.B,
                                             static_cast<std::uint32_t>(p)});
        }
        history.add(p, sample_reward(instance, p, rng));
        if (options.keep_snapshots && history.t == next_checkpoint) {
            record.snapshots.push_back(snapshot_of(history));
            next_checkpoint *= 2;
        }
    }

    record.tau = history.t;
    record.counts = history.counts;
    record.means = history.means;
    record.trace_complete = options.keep_full_trace;
    if (options.keep_snapshots &&
        (record.snapshots.empty() || record.snapshots.back().t != history.t)) {
        record.snapshots.push_back(snapshot_of(history));
    }
    return record;
}

}

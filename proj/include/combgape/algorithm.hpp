#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "combgape/action_class.hpp"
#include "combgape/environment.hpp"
#include "combgape/gap_math.hpp"
#include "combgape/history.hpp"

namespace combgape {

enum class StrategyKind { GapWeighted, NaiveLeastPulled };

// i: empirically best action, j: the most ambiguous challenger, B: the
// stopping statistic max_{j != i} (gap estimate + confidence radius).
struct AmbiguousPair {
    std::size_t i = 0;
    std::size_t j = 0;
    double B = 0.0;
};

// One post-initialization step: the selection made with t total pulls on the
// books, and the arm pulled as a result.
struct TraceStep {
    std::uint64_t t = 0;
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    double B = 0.0;
    std::uint32_t pulled = 0;
};

// Counts/means captured at a checkpoint round, for offline audits.
struct HistorySnapshot {
    std::uint64_t t = 0;
    std::vector<std::uint64_t> counts;
    std::vector<double> means;
};

enum class Termination { Stopped, BudgetExhausted };

struct RunRecord {
    std::uint64_t tau = 0;
    std::size_t a_out = 0;
    Termination terminated_by = Termination::Stopped;
    std::vector<std::uint64_t> counts;
    std::vector<double> means;
    std::vector<TraceStep> trace;   // one entry per pull after initialization
    bool trace_complete = true;
    std::vector<HistorySnapshot> snapshots;  // rounds d, 2d, 4d, ... plus tau
};

struct RunOptions {
    std::uint64_t budget_cap = 10'000'000;
    bool keep_full_trace = true;
    bool keep_snapshots = true;
};

// i(t) <- argmax_i pi^i . mu_hat; j(t) <- argmax_{j != i} gap + radius;
// both argmaxes break ties toward the lowest index. Requires every arm
// pulled at least once.
AmbiguousPair select_ambiguous_action(const ActionClass& actions, const ArmHistory& history,
                                      double delta, double R);

// argmax_s (pi^i_s - pi^j_s)^2 / (T_s (T_s + 1)); the arm whose extra pull
// shrinks the pair's confidence radius the most.
std::size_t select_arm_gap_weighted(const ActionClass& actions, std::size_t i, std::size_t j,
                                    std::span<const std::uint64_t> counts);

// Least-pulled arm among the coordinates where the two actions differ
// (baseline strategy).
std::size_t select_arm_naive(const ActionClass& actions, std::size_t i, std::size_t j,
                             std::span<const std::uint64_t> counts);

// Full identification run: pull every arm once, then alternate ambiguous-pair
// selection, the stopping check B <= 0, and a strategy-chosen pull.
// Deterministic given (instance.seed, strategy).
RunRecord run(const BanditInstance& instance, const ActionClass& actions, double delta,
              StrategyKind strategy, const RunOptions& options = {});

}

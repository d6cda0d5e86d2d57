#include "combgape/hardness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "combgape/environment.hpp"
#include "combgape/errors.hpp"
#include "combgape/gap_math.hpp"

namespace combgape::analysis {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_arm(const ActionClass& actions, std::size_t a_star, std::size_t s) {
    if (a_star >= actions.num_actions()) throw std::out_of_range("action index out of range");
    if (s >= actions.num_arms()) throw std::out_of_range("arm index out of range");
}

}  // namespace

double per_arm_gap(const ActionClass& actions, std::span<const double> mu, std::size_t a_star,
                   std::size_t s) {
    check_arm(actions, a_star, s);
    if (mu.size() != actions.num_arms()) throw std::invalid_argument("per_arm_gap: mu mismatch");

    const auto star = actions.row(a_star);
    double smallest = kInf;
    for (std::size_t k = 0; k < actions.num_actions(); ++k) {
        if (k == a_star) continue;
        const double coord_diff = std::fabs(star[s] - actions.at(k, s));
        if (coord_diff <= kCoordinateTol) continue;
        const double gap = estimated_gap(actions, a_star, k, mu);
        if (gap <= 0.0) {
            throw DegenerateInstance("per_arm_gap: a_star is not the unique best action");
        }
        smallest = std::min(smallest, gap / coord_diff);
    }
    return smallest;
}

double v_constant(const ActionClass& actions, std::size_t a_star, std::size_t s) {
    check_arm(actions, a_star, s);
    const auto star = actions.row(a_star);
    const std::size_t K = actions.num_actions();
    const std::size_t d = actions.num_arms();

    double largest = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        if (k == a_star) continue;
        const auto pk = actions.row(k);
        const double star_diff = std::fabs(star[s] - pk[s]);
        if (star_diff <= kCoordinateTol) continue;
        const double denom = star_diff * star_diff;
        for (std::size_t l = 0; l < K; ++l) {
            const auto pl = actions.row(l);
            const double coord = std::fabs(pk[s] - pl[s]);
            if (coord == 0.0) continue;
            double l1 = 0.0;
            for (std::size_t u = 0; u < d; ++u) l1 += std::fabs(pk[u] - pl[u]);
            largest = std::max(largest, coord / denom * l1);
        }
    }
    return largest;
}

double amplification_constant(const ActionClass& actions) {
    const std::size_t K = actions.num_actions();
    const std::size_t d = actions.num_arms();
    // per pair, the extreme ratio is (largest |diff|) / (smallest |diff| above
    // the coordinate tolerance); scanning pairs once covers all (s, u)
    double largest = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t l = k + 1; l < K; ++l) {
            const auto pk = actions.row(k);
            const auto pl = actions.row(l);
            double max_diff = 0.0;
            double min_diff = kInf;
            for (std::size_t u = 0; u < d; ++u) {
                const double diff = std::fabs(pk[u] - pl[u]);
                max_diff = std::max(max_diff, diff);
                if (diff > kCoordinateTol) min_diff = std::min(min_diff, diff);
            }
            if (min_diff < kInf) largest = std::max(largest, max_diff / min_diff);
        }
    }
    return largest;
}

HardnessProfile compute_hardness_profile(const ActionClass& actions, std::span<const double> mu) {
    const std::size_t a_star = best_action(actions, mu);
    const std::size_t d = actions.num_arms();

    HardnessProfile profile;
    profile.delta_s.resize(d);
    profile.v_s.resize(d);
    for (std::size_t s = 0; s < d; ++s) {
        profile.delta_s[s] = per_arm_gap(actions, mu, a_star, s);
        profile.v_s[s] = v_constant(actions, a_star, s);
        if (std::isfinite(profile.delta_s[s])) {
            const double sq = profile.delta_s[s] * profile.delta_s[s];
            profile.lb_sum += 1.0 / sq;
            profile.thm2_sum += profile.v_s[s] / sq;
        }
    }
    profile.amplification = amplification_constant(actions);
    return profile;
}

double lemma2_threshold(double v_p, double delta_p, double R, std::size_t K, double delta,
                        std::uint64_t t, double A) {
    if (t < 1) throw std::invalid_argument("lemma2_threshold: t must be >= 1");
    if (!std::isfinite(delta_p)) return kInf;
    const double Kd = static_cast<double>(K);
    const double td = static_cast<double>(t);
    const double log_term = std::log(2.0 * Kd * Kd * td * td / delta);
    return R * R * 8.0 * v_p / (delta_p * delta_p) * log_term + A;
}

std::vector<PullViolation> audit_lemma2(const RunRecord& record, const HardnessProfile& profile,
                                        double R, std::size_t K, double delta) {
    if (!record.trace_complete) {
        throw std::invalid_argument("audit_lemma2: needs a full (non-downsampled) trace");
    }
    const std::size_t d = profile.delta_s.size();
    if (record.counts.size() != d) throw std::invalid_argument("audit_lemma2: arm count mismatch");

    std::vector<PullViolation> violations;
    std::vector<std::uint64_t> counts(d, 1);  // after the initialization phase
    for (const TraceStep& step : record.trace) {
        const std::size_t p = step.pulled;
        const double threshold = lemma2_threshold(profile.v_s[p], profile.delta_s[p], R, K, delta,
                                                  step.t, profile.amplification);
        if (static_cast<double>(counts[p]) >= threshold) {
            violations.push_back(PullViolation{step.t, p, counts[p], threshold});
        }
        counts[p] += 1;
    }
    return violations;
}

double theorem2_bound(const HardnessProfile& profile, double R, std::size_t K, double delta,
                      double C) {
    if (!(C > 0.0)) throw std::invalid_argument("theorem2_bound: C must be positive");
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("theorem2_bound: delta must be in (0,1)");
    }
    const double Kd = static_cast<double>(K);
    const double log_term = std::log(2.0 * Kd * Kd * C * C / delta);
    return 8.0 * R * R * profile.thm2_sum * log_term +
           profile.amplification * static_cast<double>(profile.delta_s.size());
}

}

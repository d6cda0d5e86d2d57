#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "combgape/action_class.hpp"
#include "combgape/algorithm.hpp"

namespace combgape::analysis {

// Instance constants controlling the sample-complexity bounds. Arms on which
// no action disagrees with the best one get an infinite gap and contribute
// nothing to either sum.
struct HardnessProfile {
    std::vector<double> delta_s;  // per-arm gaps, +inf allowed
    std::vector<double> v_s;      // 0 when undefined
    double amplification = 0.0;   // largest cross-coordinate difference ratio
    double lb_sum = 0.0;          // sum over finite gaps of 1/gap^2
    double thm2_sum = 0.0;        // sum over finite gaps of V_s/gap^2
};

// min over { pi : pi_s != pi*_s } of mu.(pi* - pi) / |pi*_s - pi_s|;
// +inf when the candidate set is empty. Throws DegenerateInstance when some
// candidate shows a_star is not the unique optimum.
double per_arm_gap(const ActionClass& actions, std::span<const double> mu, std::size_t a_star,
                   std::size_t s);

// max over { pi : pi_s != pi*_s } and all pi' of
// |pi_s - pi'_s| / |pi*_s - pi_s|^2 * sum_u |pi_u - pi'_u|; 0 when empty.
double v_constant(const ActionClass& actions, std::size_t a_star, std::size_t s);

// max over coordinate pairs (s, u) and action pairs differing at s of
// |pi_u - pi'_u| / |pi_s - pi'_s|.
double amplification_constant(const ActionClass& actions);

HardnessProfile compute_hardness_profile(const ActionClass& actions, std::span<const double> mu);

// Pull-count ceiling for arm p at round t: under the all-pairs confidence
// event, the algorithm never pulls an arm whose count already reached
// 8 R^2 V_p / gap_p^2 * ln(2 K^2 t^2 / delta) + A.
double lemma2_threshold(double v_p, double delta_p, double R, std::size_t K, double delta,
                        std::uint64_t t, double A);

struct PullViolation {
    std::uint64_t t = 0;
    std::size_t arm = 0;
    std::uint64_t count = 0;
    double threshold = 0.0;
};

// Replays a full trace and flags every pull made at or above the per-arm
// threshold. Expected empty on runs where the confidence event held.
std::vector<PullViolation> audit_lemma2(const RunRecord& record, const HardnessProfile& profile,
                                        double R, std::size_t K, double delta);

// 8 R^2 * thm2_sum * ln(2 K^2 C^2 / delta) + A d, reported next to empirical
// stopping times; C has no closed form and is supplied by the caller.
double theorem2_bound(const HardnessProfile& profile, double R, std::size_t K, double delta,
                      double C);

}

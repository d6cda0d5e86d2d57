#include "combgape/gap_math.hpp"

#include <cmath>
#include <stdexcept>

namespace combgape {

namespace {

void check_pair(const ActionClass& actions, std::size_t k, std::size_t l) {
    if (k >= actions.num_actions() || l >= actions.num_actions()) {
        throw std::out_of_range("action index out of range");
    }
}

}  // namespace

double estimated_gap(const ActionClass& actions, std::size_t k, std::size_t l,
                     std::span<const double> means) {
    check_pair(actions, k, l);
    if (means.size() != actions.num_arms()) {
        throw std::invalid_argument("estimated_gap: means length mismatch");
    }
    const auto pk = actions.row(k);
    const auto pl = actions.row(l);
    double acc = 0.0;
    for (std::size_t s = 0; s < means.size(); ++s) {
        acc += means[s] * (pk[s] - pl[s]);
    }
    return acc;
}

double confidence_radius(const ActionClass& actions, std::size_t k, std::size_t l,
                         std::span<const std::uint64_t> counts, std::uint64_t t,
                         double delta, double R) {
    check_pair(actions, k, l);
    if (counts.size() != actions.num_arms()) {
        throw std::invalid_argument("confidence_radius: counts length mismatch");
    }
    if (t < 1) throw std::invalid_argument("confidence_radius: t must be >= 1");
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("confidence_radius: delta must be in (0,1)");
    }
    if (!(R > 0.0)) throw std::invalid_argument("confidence_radius: R must be positive");

    const auto pk = actions.row(k);
    const auto pl = actions.row(l);
    double weighted_inverse_counts = 0.0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        const double diff = pk[s] - pl[s];
        if (diff == 0.0) continue;
        if (counts[s] == 0) {
            throw std::invalid_argument(
                "confidence_radius: zero pull count on a coordinate where the actions differ");
        }
        weighted_inverse_counts += diff * diff / static_cast<double>(counts[s]);
    }
    if (weighted_inverse_counts == 0.0) return 0.0;

    const double K = static_cast<double>(actions.num_actions());
    const double td = static_cast<double>(t);
    const double log_term = std::log(2.0 * K * K * td * td / delta);
    return R * std::sqrt(0.5 * weighted_inverse_counts * log_term);
}

GapBound gap_bound(const ActionClass& actions, std::size_t k, std::size_t l,
                   const ArmHistory& history, double delta, double R) {
    GapBound g;
    g.delta_hat = estimated_gap(actions, k, l, history.means);
    g.beta = confidence_radius(actions, k, l, history.counts, history.t, delta, R);
    g.upper = g.delta_hat + g.beta;
    return g;
}

}

#include "combgape/environment.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "combgape/errors.hpp"

namespace combgape {

NoiseSpec NoiseSpec::gaussian_scaled(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("NoiseSpec: sigma must be positive");
    return {Kind::GaussianScaled, sigma};
}

void BanditInstance::validate() const {
    if (!(R > 0.0)) throw std::invalid_argument("BanditInstance: R must be positive");
    for (double m : mu) {
        if (!std::isfinite(m)) throw std::invalid_argument("BanditInstance: non-finite mean");
    }
}

double sample_reward(const BanditInstance& instance, std::size_t arm, Rng& rng) {
    if (arm >= instance.mu.size()) throw std::out_of_range("sample_reward: arm out of range");
    switch (instance.noise.kind) {
        case NoiseSpec::Kind::Disabled:
            return instance.mu[arm];
        case NoiseSpec::Kind::GaussianUnit:
            return instance.mu[arm] + instance.R * rng.gaussian();
        case NoiseSpec::Kind::GaussianScaled:
            return instance.mu[arm] + instance.noise.sigma * rng.gaussian();
    }
    throw std::logic_error("sample_reward: unknown noise kind");
}

std::size_t best_action(const ActionClass& actions, std::span<const double> mu) {
    if (mu.size() != actions.num_arms()) {
        throw std::invalid_argument("best_action: mu length mismatch");
    }
    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    double second_value = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < actions.num_actions(); ++k) {
        const auto pk = actions.row(k);
        double value = 0.0;
        for (std::size_t s = 0; s < mu.size(); ++s) value += mu[s] * pk[s];
        if (value > best_value) {
            second_value = best_value;
            best_value = value;
            best = k;
        } else if (value > second_value) {
            second_value = value;
        }
    }
    if (best_value - second_value <= kBestActionTieTol) {
        throw DegenerateInstance("best_action: top two action values tie within tolerance");
    }
    return best;
}

}

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "combgape/action_class.hpp"
#include "combgape/rng.hpp"

namespace combgape {

// Reward noise attached to an instance. A Gaussian with standard deviation
// sigma is sigma-sub-Gaussian, so GaussianUnit (sigma = R) realizes the
// R-sub-Gaussian assumption exactly. Disabled returns the true mean and
// exists for deterministic tests.
struct NoiseSpec {
    enum class Kind { GaussianUnit, GaussianScaled, Disabled };

    Kind kind = Kind::GaussianUnit;
    double sigma = 0.0;  // GaussianScaled only

    static NoiseSpec gaussian_unit() { return {Kind::GaussianUnit, 0.0}; }
    static NoiseSpec gaussian_scaled(double sigma);
    static NoiseSpec disabled() { return {Kind::Disabled, 0.0}; }

    bool operator==(const NoiseSpec&) const = default;
};

struct BanditInstance {
    std::vector<double> mu;
    double R = 1.0;
    NoiseSpec noise;
    std::uint64_t seed = 0;

    void validate() const;  // R > 0, mu finite
};

double sample_reward(const BanditInstance& instance, std::size_t arm, Rng& rng);

// Two distinct actions whose values are closer than this make the
// identification problem ill-posed.
inline constexpr double kBestActionTieTol = 1e-9;

// argmax_k mu^T pi^k; throws DegenerateInstance when the top two action
// values are within kBestActionTieTol.
std::size_t best_action(const ActionClass& actions, std::span<const double> mu);

}

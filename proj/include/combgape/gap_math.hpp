#pragma once

#include <cstdint>
#include <span>

#include "combgape/action_class.hpp"
#include "combgape/history.hpp"

namespace combgape {

// Upper confidence bound on the gap mu^T (pi^k - pi^l).
struct GapBound {
    double delta_hat = 0.0;
    double beta = 0.0;
    double upper = 0.0;  // delta_hat + beta
};

// mu_hat^T (pi^k - pi^l), summed in ascending arm order so that
// estimated_gap(k, l) == -estimated_gap(l, k) exactly.
double estimated_gap(const ActionClass& actions, std::size_t k, std::size_t l,
                     std::span<const double> means);

// R * sqrt( (1/2) * sum_s (pi^k_s - pi^l_s)^2 / T_s * ln(2 K^2 t^2 / delta) ).
// Every arm where the two actions differ must have been pulled at least once.
double confidence_radius(const ActionClass& actions, std::size_t k, std::size_t l,
                         std::span<const std::uint64_t> counts, std::uint64_t t,
                         double delta, double R);

GapBound gap_bound(const ActionClass& actions, std::size_t k, std::size_t l,
                   const ArmHistory& history, double delta, double R);

}

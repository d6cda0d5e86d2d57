#pragma once

#include <cstddef>
#include <vector>

#include "combgape/action_class.hpp"
#include "combgape/knapsack.hpp"
#include "combgape/rng.hpp"
#include "combgape/transport.hpp"

namespace combgape::oracles {

// Perturb-and-solve instance generation. Every action row is the exact
// solver output for one recorded perturbed parameter vector, so the class
// can be re-derived and checked.

struct KnapsackExperiment {
    KnapsackSpec spec;
    std::vector<double> mu;  // true item values
    ActionClass actions;     // distinct optimal count vectors
    std::vector<std::vector<double>> perturbed_values;  // one per action row
};

// Weights uniform on {5..50}, capacity 100, true value of item s uniform in
// [w_s - width, w_s + width]; the action class collects the optima of
// n_samples independently perturbed value vectors.
KnapsackExperiment generate_knapsack_experiment(std::size_t d, Rng& rng,
                                                std::size_t n_samples = 100,
                                                double perturb_width = 5.0);

struct TransportExperiment {
    TransportSpec spec;
    std::vector<double> mu;  // negated costs, row-major; arm (i,j) -> i*n + j
    ActionClass actions;     // flattened optimal plans
    std::vector<std::vector<double>> perturbed_costs;
};

// Supplies and demands uniform on (0,1] then normalized to unit mass; the
// action class collects the optimal plans of n_samples cost matrices with
// every entry perturbed uniformly within +-width (clamped at zero).
TransportExperiment generate_transport_experiment(const CostMatrix& cost, Rng& rng,
                                                  std::size_t n_samples = 1000,
                                                  double perturb_width = 1.0);

}

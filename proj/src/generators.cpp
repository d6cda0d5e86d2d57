#include "combgape/generators.hpp"

#include <algorithm>
#include <stdexcept>

#include "combgape/errors.hpp"

namespace combgape::oracles {

namespace {

constexpr int kWeightMin = 5;
constexpr int kWeightMax = 50;
constexpr int kKnapsackCapacity = 100;
constexpr std::size_t kGenerationRetries = 10;

bool is_duplicate(const std::vector<std::vector<double>>& rows, const std::vector<double>& row) {
    return std::any_of(rows.begin(), rows.end(), [&](const std::vector<double>& r) {
        return combgape::rows_equal(r, row, ActionClass::kDedupeTol);
    });
}

}  // namespace

KnapsackExperiment generate_knapsack_experiment(std::size_t d, Rng& rng, std::size_t n_samples,
                                                double perturb_width) {
    if (d < 2) throw std::invalid_argument("generate_knapsack_experiment: need d >= 2");
    if (n_samples < 1) throw std::invalid_argument("generate_knapsack_experiment: need samples");
    if (perturb_width < 0.0) {
        throw std::invalid_argument("generate_knapsack_experiment: negative width");
    }

    KnapsackSpec spec;
    spec.capacity = kKnapsackCapacity;
    spec.weights.resize(d);
    spec.values.resize(d);
    for (std::size_t s = 0; s < d; ++s) {
        spec.weights[s] = static_cast<int>(rng.uniform_int(kWeightMin, kWeightMax));
        spec.values[s] = static_cast<double>(spec.weights[s]) +
                         rng.uniform(-perturb_width, perturb_width);
    }

    KnapsackSpec perturbed = spec;
    for (std::size_t attempt = 0; attempt < kGenerationRetries; ++attempt) {
        std::vector<std::vector<double>> rows;
        std::vector<std::vector<double>> perturbations;
        for (std::size_t sample = 0; sample < n_samples; ++sample) {
            for (std::size_t s = 0; s < d; ++s) {
                perturbed.values[s] = static_cast<double>(spec.weights[s]) +
                                      rng.uniform(-perturb_width, perturb_width);
            }
            const std::vector<int> counts = solve_unbounded_knapsack(perturbed);
            std::vector<double> row(d);
            for (std::size_t s = 0; s < d; ++s) row[s] = static_cast<double>(counts[s]);
            if (!is_duplicate(rows, row)) {
                rows.push_back(std::move(row));
                perturbations.push_back(perturbed.values);
            }
        }
        if (rows.size() >= 2) {
            return KnapsackExperiment{spec, spec.values, ActionClass(rows),
                                      std::move(perturbations)};
        }
    }
    throw DegenerateInstance(
        "generate_knapsack_experiment: fewer than 2 distinct actions after retries");
}

TransportExperiment generate_transport_experiment(const CostMatrix& cost, Rng& rng,
                                                  std::size_t n_samples, double perturb_width) {
    if (cost.m == 0 || cost.n == 0 || cost.cost.size() != cost.m * cost.n) {
        throw std::invalid_argument("generate_transport_experiment: bad cost matrix");
    }
    if (n_samples < 1) throw std::invalid_argument("generate_transport_experiment: need samples");
    if (perturb_width < 0.0) {
        throw std::invalid_argument("generate_transport_experiment: negative width");
    }

    TransportSpec spec;
    spec.m = cost.m;
    spec.n = cost.n;
    spec.cost = cost.cost;
    spec.supply.resize(cost.m);
    spec.demand.resize(cost.n);
    double supply_total = 0.0;
    for (double& s : spec.supply) {
        s = rng.uniform_open();
        supply_total += s;
    }
    for (double& s : spec.supply) s /= supply_total;
    double demand_total = 0.0;
    for (double& d : spec.demand) {
        d = rng.uniform_open();
        demand_total += d;
    }
    for (double& d : spec.demand) d /= demand_total;

    std::vector<double> mu(cost.cost.size());
    for (std::size_t c = 0; c < cost.cost.size(); ++c) mu[c] = -cost.cost[c];

    TransportSpec perturbed = spec;
    for (std::size_t attempt = 0; attempt < kGenerationRetries; ++attempt) {
        std::vector<std::vector<double>> rows;
        std::vector<std::vector<double>> perturbations;
        for (std::size_t sample = 0; sample < n_samples; ++sample) {
            for (std::size_t c = 0; c < spec.cost.size(); ++c) {
                perturbed.cost[c] =
                    std::max(0.0, spec.cost[c] + rng.uniform(-perturb_width, perturb_width));
            }
            std::vector<double> row = solve_transport(perturbed);
            if (!is_duplicate(rows, row)) {
                rows.push_back(std::move(row));
                perturbations.push_back(perturbed.cost);
            }
        }
        if (rows.size() >= 2) {
            return TransportExperiment{spec, std::move(mu), ActionClass(rows),
                                       std::move(perturbations)};
        }
    }
    throw DegenerateInstance(
        "generate_transport_experiment: fewer than 2 distinct actions after retries");
}

}

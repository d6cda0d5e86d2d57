#include "combgape/knapsack.hpp"

#include <cmath>
#include <stdexcept>

namespace combgape::oracles {

void KnapsackSpec::validate() const {
    if (weights.empty() || weights.size() != values.size()) {
        throw std::invalid_argument("KnapsackSpec: weights/values must be nonempty and equal length");
    }
    for (int w : weights) {
        if (w < 1) throw std::invalid_argument("KnapsackSpec: weights must be >= 1");
    }
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("KnapsackSpec: non-finite value");
    }
    if (capacity < 0) throw std::invalid_argument("KnapsackSpec: capacity must be >= 0");
}

std::vector<int> solve_unbounded_knapsack(const KnapsackSpec& spec) {
    spec.validate();
    const std::size_t d = spec.num_items();
    const int W = spec.capacity;

    // best[c] = max value at capacity c; choice[c] = item added there, -1 if
    // the capacity-(c-1) solution is carried forward unchanged.
    std::vector<double> best(static_cast<std::size_t>(W) + 1, 0.0);
    std::vector<int> choice(static_cast<std::size_t>(W) + 1, -1);
    for (int c = 1; c <= W; ++c) {
        double value = best[c - 1];
        int pick = -1;
        for (std::size_t s = 0; s < d; ++s) {
            const int w = spec.weights[s];
            if (w > c) continue;
            const double candidate = best[c - w] + spec.values[s];
            if (candidate > value) {
                value = candidate;
                pick = static_cast<int>(s);
            }
        }
        best[c] = value;
        choice[c] = pick;
    }

    std::vector<int> counts(d, 0);
    for (int c = W; c > 0;) {
        if (choice[c] < 0) {
            --c;
        } else {
            counts[choice[c]] += 1;
            c -= spec.weights[choice[c]];
        }
    }
    return counts;
}

double knapsack_value(std::span<const double> values, std::span<const int> counts) {
    double total = 0.0;
    for (std::size_t s = 0; s < values.size(); ++s) {
        total += values[s] * static_cast<double>(counts[s]);
    }
    return total;
}

}

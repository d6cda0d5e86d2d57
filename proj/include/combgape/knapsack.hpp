#pragma once

#include <span>
#include <vector>

namespace combgape::oracles {

// Unbounded knapsack: item s may be packed any number of times.
struct KnapsackSpec {
    std::vector<int> weights;   // each >= 1
    std::vector<double> values;
    int capacity = 0;           // >= 0

    std::size_t num_items() const { return weights.size(); }
    void validate() const;
};

// Count vector maximizing total value subject to the capacity. Exact DP over
// capacities 0..W; reconstruction prefers the lowest item index on equal DP
// value, so the output is deterministic.
std::vector<int> solve_unbounded_knapsack(const KnapsackSpec& spec);

double knapsack_value(std::span<const double> values, std::span<const int> counts);

}

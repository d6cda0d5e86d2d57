#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace combgape::oracles {

struct CostMatrix {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> cost;  // row-major

    double at(std::size_t i, std::size_t j) const { return cost[i * n + j]; }
};

// CSV cost matrix: one row per line, comma-separated nonnegative reals,
// no header.
CostMatrix load_cost_matrix(const std::string& path);

inline constexpr double kBalanceTol = 1e-9;

struct TransportSpec {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> cost;    // m*n row-major, finite, >= 0
    std::vector<double> supply;  // length m, positive
    std::vector<double> demand;  // length n, positive; sums balance within kBalanceTol

    void validate() const;
};

// Basic optimal plan together with its dual certificate. The basis always
// holds exactly m+n-1 cells (degenerate zero flows included), and on
// termination every nonbasic reduced cost c_ij - u_i - v_j is nonnegative
// up to pivot tolerance.
struct TransportSolution {
    std::vector<double> plan;  // m*n row-major
    std::vector<char> basic;   // m*n mask
    std::vector<double> u;     // row duals
    std::vector<double> v;     // column duals
    double cost = 0.0;
    std::size_t pivots = 0;
};

// Transportation simplex: northwest-corner start, MODI pricing, Bland-style
// lowest-index entering/leaving selection so degenerate pivots cannot cycle.
TransportSolution solve_transport_detailed(const TransportSpec& spec);

std::vector<double> solve_transport(const TransportSpec& spec);

}

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace combgape {

// Componentwise tolerance for deciding whether two action coordinates differ.
// Solver-generated actions carry floating-point noise, so exact comparison
// would misclassify numerically identical coordinates.
inline constexpr double kCoordinateTol = 1e-12;

// The K candidate actions, one real-valued length-d row per action.
class ActionClass {
public:
    // rows closer than this (componentwise) are considered duplicates and
    // rejected at construction; generators must deduplicate first
    static constexpr double kDedupeTol = 1e-9;

    explicit ActionClass(const std::vector<std::vector<double>>& rows);

    std::size_t num_actions() const { return K_; }
    std::size_t num_arms() const { return d_; }

    std::span<const double> row(std::size_t k) const { return {data_.data() + k * d_, d_}; }
    double at(std::size_t k, std::size_t s) const { return data_[k * d_ + s]; }
    std::span<const double> flat() const { return data_; }

private:
    std::vector<double> data_;  // K x d, row-major
    std::size_t K_ = 0;
    std::size_t d_ = 0;
};

bool rows_equal(std::span<const double> a, std::span<const double> b, double tol);

}

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace combgape {

// Per-arm pull counts and running empirical means. t is the total number of
// pulls so far; it is the round index used inside the confidence radius.
struct ArmHistory {
    std::vector<std::uint64_t> counts;
    std::vector<double> sums;
    std::vector<double> means;
    std::uint64_t t = 0;

    explicit ArmHistory(std::size_t d) : counts(d, 0), sums(d, 0.0), means(d, 0.0) {}

    std::size_t num_arms() const { return counts.size(); }

    void add(std::size_t arm, double reward);
};

}

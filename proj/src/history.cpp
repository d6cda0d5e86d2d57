#include "combgape/history.hpp"

#include <cmath>
#include <stdexcept>

namespace combgape {

void ArmHistory::add(std::size_t arm, double reward) {
    if (arm >= counts.size()) throw std::out_of_range("ArmHistory::add: arm out of range");
    if (!std::isfinite(reward)) throw std::invalid_argument("ArmHistory::add: non-finite reward");
    counts[arm] += 1;
    sums[arm] += reward;
    means[arm] = sums[arm] / static_cast<double>(counts[arm]);
    t += 1;
}

}

#include "combgape/action_class.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace combgape {

bool rows_equal(std::span<const double> a, std::span<const double> b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (std::fabs(a[s] - b[s]) > tol) return false;
    }
    return true;
}

ActionClass::ActionClass(const std::vector<std::vector<double>>& rows) {
    K_ = rows.size();
    if (K_ < 2) throw std::invalid_argument("ActionClass: need at least 2 actions");
    d_ = rows.front().size();
    if (d_ < 2) throw std::invalid_argument("ActionClass: need at least 2 arms");

    data_.reserve(K_ * d_);
    for (std::size_t k = 0; k < K_; ++k) {
        if (rows[k].size() != d_) {
            throw std::invalid_argument("ActionClass: row " + std::to_string(k) +
                                        " has inconsistent length");
        }
        for (double x : rows[k]) {
            if (!std::isfinite(x)) {
                throw std::invalid_argument("ActionClass: non-finite entry in row " +
                                            std::to_string(k));
            }
            data_.push_back(x);
        }
    }

    for (std::size_t k = 0; k < K_; ++k) {
        for (std::size_t l = k + 1; l < K_; ++l) {
            if (rows_equal(row(k), row(l), kDedupeTol)) {
                throw std::invalid_argument("ActionClass: rows " + std::to_string(k) + " and " +
                                            std::to_string(l) + " are duplicates");
            }
        }
    }
}

}

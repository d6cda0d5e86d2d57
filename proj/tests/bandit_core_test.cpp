#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "combgape/action_class.hpp"
#include "combgape/gap_math.hpp"
#include "combgape/history.hpp"
#include "combgape/rng.hpp"

using namespace combgape;

namespace {

ActionClass random_actions(Rng& rng, std::size_t K, std::size_t d) {
    std::vector<std::vector<double>> rows(K, std::vector<double>(d));
    for (auto& row : rows) {
        for (double& x : row) x = rng.uniform(-2.0, 2.0);
    }
    return ActionClass(rows);
}

std::vector<std::uint64_t> random_counts(Rng& rng, std::size_t d, std::uint64_t lo,
                                         std::uint64_t hi) {
    std::vector<std::uint64_t> counts(d);
    for (auto& c : counts) c = rng.uniform_int(lo, hi);
    return counts;
}

}  // namespace

TEST_CASE("ActionClass validates its invariants") {
    CHECK_THROWS_AS(ActionClass({{1.0, 0.0}}), std::invalid_argument);                // K < 2
    CHECK_THROWS_AS(ActionClass({{1.0}, {2.0}}), std::invalid_argument);              // d < 2
    CHECK_THROWS_AS(ActionClass({{1.0, 0.0}, {1.0, 0.0}}), std::invalid_argument);    // dupes
    CHECK_THROWS_AS(ActionClass({{1.0, 0.0}, {1.0, 1e-10}}), std::invalid_argument);  // near-dupes
    CHECK_THROWS_AS(ActionClass({{1.0, 0.0}, {1.0, 0.0, 2.0}}), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ActionClass({{1.0, inf}, {0.0, 1.0}}), std::invalid_argument);

    const ActionClass ok({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(ok.num_actions() == 2);
    CHECK(ok.num_arms() == 2);
    CHECK(ok.at(1, 1) == 1.0);
}

TEST_CASE("ArmHistory tracks counts, sums and means") {
    ArmHistory h(2);
    h.add(0, 2.0);
    CHECK(h.counts[0] == 1);
    CHECK(h.means[0] == 2.0);
    CHECK(h.t == 1);

    h.add(0, 4.0);
    CHECK(h.means[0] == doctest::Approx(3.0));
    CHECK(h.t == 2);

    CHECK_THROWS_AS(h.add(2, 1.0), std::out_of_range);
    CHECK_THROWS_AS(h.add(0, std::nan("")), std::invalid_argument);
}

TEST_CASE("running mean of seeded gaussian draws lands near the true mean") {
    Rng rng(42);
    ArmHistory h(2);
    for (int i = 0; i < 1000; ++i) h.add(0, 5.0 + rng.gaussian());
    CHECK(std::fabs(h.means[0] - 5.0) < 0.2);
    CHECK(h.counts[0] == 1000);
    CHECK(h.t == 1000);
}

TEST_CASE("estimated_gap basics") {
    const ActionClass actions({{1.0, 0.0}, {0.0, 1.0}});
    const std::vector<double> means{3.0, 1.0};
    CHECK(estimated_gap(actions, 0, 0, means) == 0.0);
    CHECK(estimated_gap(actions, 0, 1, means) == doctest::Approx(2.0));
    CHECK_THROWS_AS(estimated_gap(actions, 0, 5, means), std::out_of_range);
}

TEST_CASE("estimated_gap matches a high-precision reference on a 5-dim case") {
    const ActionClass actions({{1.5, 0.0, -2.25, 3.125, 0.5}, {-0.5, 1.0, 0.75, 0.125, 2.5}});
    const std::vector<double> means{0.3, -1.2, 2.5, 0.01, -0.7};
    // extended-precision term-by-term evaluation of the inner product
    CHECK(estimated_gap(actions, 0, 1, means) == doctest::Approx(-4.27).epsilon(1e-12));
}

TEST_CASE("estimated_gap is exactly antisymmetric") {
    Rng rng(7);
    for (int instance = 0; instance < 20; ++instance) {
        const ActionClass actions = random_actions(rng, 5, 6);
        std::vector<double> means(6);
        for (double& m : means) m = rng.uniform(-3.0, 3.0);
        for (std::size_t k = 0; k < 5; ++k) {
            for (std::size_t l = 0; l < 5; ++l) {
                CHECK(estimated_gap(actions, k, l, means) == -estimated_gap(actions, l, k, means));
            }
        }
    }
}

TEST_CASE("confidence_radius matches the closed form on a single differing coordinate") {
    // K=3, delta=0.05, t=10, one coordinate with diff^2=4 and T=4:
    // sqrt(0.5 * (4/4) * ln(2*9*100/0.05))
    const ActionClass actions({{2.0, 1.0}, {0.0, 1.0}, {1.0, 1.0}});
    const std::vector<std::uint64_t> counts{4, 9};
    const double beta = confidence_radius(actions, 0, 1, counts, 10, 0.05, 1.0);
    CHECK(beta == doctest::Approx(2.2903355886679846).epsilon(1e-12));
}

TEST_CASE("confidence_radius is zero only for identical rows") {
    // identical rows are rejected by ActionClass, so k == l is the zero case
    const ActionClass actions({{1.0, 0.0}, {0.0, 1.0}});
    const std::vector<std::uint64_t> counts{1, 1};
    CHECK(confidence_radius(actions, 0, 0, counts, 5, 0.1, 1.0) == 0.0);
    CHECK(confidence_radius(actions, 0, 1, counts, 5, 0.1, 1.0) > 0.0);
}

TEST_CASE("confidence_radius requires pulls on differing coordinates") {
    const ActionClass actions({{1.0, 0.0}, {0.0, 1.0}});
    const std::vector<std::uint64_t> zero_on_diff{0, 1};
    CHECK_THROWS_AS(confidence_radius(actions, 0, 1, zero_on_diff, 5, 0.1, 1.0),
                    std::invalid_argument);
    // a zero count is fine where the actions agree
    const ActionClass shared({{1.0, 0.5, 2.0}, {0.0, 0.5, 1.0}});
    const std::vector<std::uint64_t> counts{1, 0, 1};
    CHECK(confidence_radius(shared, 0, 1, counts, 5, 0.1, 1.0) > 0.0);
}

TEST_CASE("doubling every count divides the radius by sqrt(2)") {
    Rng rng(11);
    const ActionClass actions = random_actions(rng, 4, 5);
    const std::vector<std::uint64_t> counts{3, 8, 2, 5, 13};
    std::vector<std::uint64_t> doubled(counts);
    for (auto& c : doubled) c *= 2;
    const double base = confidence_radius(actions, 1, 2, counts, 40, 0.05, 1.5);
    const double halved = confidence_radius(actions, 1, 2, doubled, 40, 0.05, 1.5);
    CHECK(halved == doctest::Approx(base / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("confidence_radius symmetry and monotonicity") {
    Rng rng(13);
    for (int instance = 0; instance < 25; ++instance) {
        const ActionClass actions = random_actions(rng, 4, 5);
        const auto counts = random_counts(rng, 5, 1, 50);
        const std::uint64_t t = rng.uniform_int(5, 1000);
        const double delta = rng.uniform(0.01, 0.5);
        const double R = rng.uniform(0.5, 2.0);
        const std::size_t k = rng.uniform_int(0, 3);
        std::size_t l = rng.uniform_int(0, 3);
        if (l == k) l = (l + 1) % 4;

        const double beta = confidence_radius(actions, k, l, counts, t, delta, R);
        CHECK(beta == confidence_radius(actions, l, k, counts, t, delta, R));

        // more pulls on a differing arm shrink beta strictly
        for (std::size_t s = 0; s < 5; ++s) {
            if (actions.at(k, s) == actions.at(l, s)) continue;
            auto more = counts;
            more[s] += 1;
            CHECK(confidence_radius(actions, k, l, more, t, delta, R) < beta);
        }
        // a later round widens beta strictly
        CHECK(confidence_radius(actions, k, l, counts, t + 1, delta, R) > beta);
    }
}

TEST_CASE("gap_bound packages the pieces exactly") {
    Rng rng(17);
    for (int instance = 0; instance < 20; ++instance) {
        const ActionClass actions = random_actions(rng, 5, 4);
        ArmHistory h(4);
        for (std::size_t s = 0; s < 4; ++s) {
            const auto pulls = rng.uniform_int(1, 20);
            for (std::uint64_t p = 0; p < pulls; ++p) h.add(s, rng.uniform(-1.0, 1.0));
        }
        const std::size_t k = rng.uniform_int(0, 4);
        const std::size_t l = rng.uniform_int(0, 4);
        const GapBound g = gap_bound(actions, k, l, h, 0.1, 1.0);
        CHECK(g.upper == g.delta_hat + g.beta);
        CHECK(g.delta_hat == estimated_gap(actions, k, l, h.means));
        CHECK(g.beta == confidence_radius(actions, k, l, h.counts, h.t, 0.1, 1.0));
        if (k == l) {
            CHECK(g.delta_hat == 0.0);
            CHECK(g.beta == 0.0);
            CHECK(g.upper == 0.0);
        }
    }
}

TEST_CASE("gap_bound upper is negative for suboptimal actions once counts are large") {
    // noise-free means equal to mu and heavy counts: beta is tiny, so the
    // upper bound of every suboptimal-vs-best gap drops below zero
    const ActionClass actions({{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.4}});
    const std::vector<double> mu{2.0, 0.5};
    ArmHistory h(2);
    h.counts = {1000000, 1000000};
    h.means = {mu[0], mu[1]};
    h.sums = {mu[0] * 1e6, mu[1] * 1e6};
    h.t = 2000000;
    const std::size_t best = 0;  // value 2.0 vs 0.5 vs 1.2
    for (std::size_t k = 1; k < 3; ++k) {
        const GapBound g = gap_bound(actions, k, best, h, 0.05, 1.0);
        CHECK(g.upper < 0.0);
    }
}

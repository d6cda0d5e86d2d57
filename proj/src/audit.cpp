#include "combgape/audit.hpp"

#include <cmath>
#include <stdexcept>

#include "combgape/gap_math.hpp"

namespace combgape {

AuditReport audit_event_E(std::span<const HistorySnapshot> snapshots, const ActionClass& actions,
                          std::span<const double> mu, double delta, double R) {
    if (mu.size() != actions.num_arms()) {
        throw std::invalid_argument("audit_event_E: mu length mismatch");
    }
    const std::size_t K = actions.num_actions();

    AuditReport report;
    for (const HistorySnapshot& snap : snapshots) {
        report.checkpoints_audited += 1;
        // |Delta - Delta_hat| and beta are both symmetric in (k, l), so the
        // unordered pairs cover the full event.
        for (std::size_t k = 0; k < K && report.event_E_held; ++k) {
            for (std::size_t l = k + 1; l < K; ++l) {
                const double true_gap = estimated_gap(actions, k, l, mu);
                const double est_gap = estimated_gap(actions, k, l, snap.means);
                const double beta =
                    confidence_radius(actions, k, l, snap.counts, snap.t, delta, R);
                const double err = std::fabs(true_gap - est_gap);
                if (err > beta) {
                    report.event_E_held = false;
                    report.first_violation = EventViolation{snap.t, k, l, err, beta};
                    break;
                }
            }
        }
        if (!report.event_E_held) break;
    }
    return report;
}

}

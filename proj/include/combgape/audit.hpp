#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "combgape/action_class.hpp"
#include "combgape/algorithm.hpp"

namespace combgape {

struct EventViolation {
    std::uint64_t t = 0;
    std::size_t k = 0;
    std::size_t l = 0;
    double abs_error = 0.0;  // |Delta_kl - estimated Delta_kl(t)|
    double beta = 0.0;
};

struct AuditReport {
    bool event_E_held = true;
    std::optional<EventViolation> first_violation;
    std::size_t checkpoints_audited = 0;
};

// Checks, at every recorded checkpoint, that each pairwise gap estimate lies
// within its confidence radius of the true gap. This is the good event the
// stopping rule's correctness conditions on.
AuditReport audit_event_E(std::span<const HistorySnapshot> snapshots, const ActionClass& actions,
                          std::span<const double> mu, double delta, double R);

}

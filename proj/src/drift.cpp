#include "hbvm/drift.hpp"

#include <cmath>
#include <stdexcept>

namespace hbvm {

DriftReport drift_report(const Trajectory& traj, const NamedInvariant& invariant)
{
    if (traj.states.empty())
        throw std::invalid_argument("drift_report: empty trajectory");

    DriftReport report;
    report.invariant = invariant.name;
    report.errors.reserve(traj.states.size());

    const double reference = invariant.value(traj.states.front());
    report.absolute = (reference == 0.0);
    const double scale = report.absolute ? 1.0 : std::abs(reference);

    for (const State& y : traj.states) {
        const double err = std::abs(invariant.value(y) - reference) / scale;
        report.errors.push_back(err);
        report.max_drift = std::max(report.max_drift, err);
    }
    report.final_drift = report.errors.back();
    return report;
}

std::vector<DriftReport> drift_reports(const Trajectory& traj,
                                       const std::vector<NamedInvariant>& invariants)
{
    std::vector<DriftReport> reports;
    reports.reserve(invariants.size());
    for (const NamedInvariant& inv : invariants)
        reports.push_back(drift_report(traj, inv));
    return reports;
}

}  // namespace hbvm

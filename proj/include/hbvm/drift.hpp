#pragma once

#include <string>
#include <vector>

#include "hbvm/solver.hpp"
#include "hbvm/system.hpp"

namespace hbvm {

// Per-step conservation record for one invariant I along a trajectory:
// errors[n] = |I(y_n) - I(y_0)| / |I(y_0)|, so errors[0] = 0.  When
// I(y_0) = 0 the division is skipped, absolute errors are stored and the
// `absolute` flag is set.
struct DriftReport {
    std::string invariant;
    bool absolute = false;
    std::vector<double> errors;
    double max_drift = 0.0;
    double final_drift = 0.0;
};

DriftReport drift_report(const Trajectory& traj, const NamedInvariant& invariant);

std::vector<DriftReport> drift_reports(const Trajectory& traj,
                                       const std::vector<NamedInvariant>& invariants);

}  // namespace hbvm

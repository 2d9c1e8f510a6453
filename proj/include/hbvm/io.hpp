#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hbvm/drift.hpp"
#include "hbvm/solver.hpp"

namespace hbvm {

// Shortest-faithful decimal: 17 significant digits, enough to reproduce
// any double exactly on re-parse.  Output is locale-independent.
std::string format_double(double x);

// Trajectory CSV, header "t,y1,...,y2m", one row per state.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

// Parses the format written above.  Throws std::runtime_error on
// malformed input.
Trajectory read_trajectory_csv(std::istream& in);

// Drift CSV, header "t,<name>_rel_err,..." (suffix _abs_err for reports
// flagged absolute), one row per state.
void write_drift_csv(std::ostream& out, const Trajectory& traj,
                     const std::vector<DriftReport>& reports);

}  // namespace hbvm

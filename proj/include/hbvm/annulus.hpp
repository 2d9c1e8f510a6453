#pragma once

#include <vector>

#include "hbvm/solver.hpp"
#include "hbvm/system.hpp"

namespace hbvm {

// An orbit counts as escaped once its max-norm distance from the center
// exceeds `radius`.  The distance is sampled every `check_every` steps
// (and always at the final state).  An empty center means the origin.
struct EscapeCriterion {
    double radius = 2.0;
    long check_every = 1;
    State center;
};

struct EscapeResult {
    bool escaped = false;
    long first_index = -1;  // index of the earliest sampled escaping state
};

// Scans an existing trajectory for escape.  Pure inspection; no dynamics.
EscapeResult orbit_escapes(const Trajectory& traj, const EscapeCriterion& criterion);

// Method and budget used for each bisection probe.
struct IntegratorParams {
    int s = 2;
    int k = 5;
    double h = 1.0;
    long steps = 2500;
    SolverConfig solver;
};

// One probe of the dichotomic search. `nonconvergence` marks probes whose
// stage iteration diverged; they count as escaped (leaving the region of
// regular behavior) with escape_index = the failing step.
struct ProbeRecord {
    double c = 0.0;
    bool escaped = false;
    long steps_run = 0;
    long escape_index = -1;
    bool nonconvergence = false;
};

struct BisectionResult {
    double c_low = 0.0;
    double c_high = 1.0;
    State boundary_point;  // gamma(c_low) = (1 - c_low) P0 + c_low Q
    int probes = 0;
    std::vector<ProbeRecord> log;
};

// Dichotomic search for the boundary of the region of bounded orbits
// around the center P0, along the segment gamma(c) = (1-c) P0 + c Q:
// maintain a non-escaping c_low and an escaping c_high, halving the
// bracket until c_high - c_low <= tol.  The two endpoints are probed
// first; std::invalid_argument is thrown when c=1 does not escape or c=0
// does (no bracket).  Including those two validation probes, at most
// ceil(log2(1/tol)) + 2 integrations are run.  Deterministic: identical
// inputs give identical results and logs.
BisectionResult bisect_boundary(const HamiltonianSystem& sys, const State& P0,
                                const State& Q, const IntegratorParams& params,
                                double tol, const EscapeCriterion& criterion = {});

}  // namespace hbvm

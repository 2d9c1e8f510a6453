#pragma once

#include <vector>

#include "hbvm/system.hpp"
#include "hbvm/tableau.hpp"

namespace hbvm {

// Tolerances for the fixed-point iteration on the stage coefficients.
// Convergence is declared when the max-norm update falls below
// abs_tol + rel_tol * ||gamma||_inf.
struct SolverConfig {
    double abs_tol = 1e-14;
    double rel_tol = 1e-14;
    int max_iterations = 100;
};

// Converged stage coefficients: gamma[j] is the coefficient of the j-th
// basis polynomial in the derivative of the stage polynomial, a full
// phase-space vector each.
struct StageCoefficients {
    std::vector<State> gamma;
    int iterations = 0;
    double residual = 0.0;
};

// Solves the stage equations at state y0 with step size h by fixed-point
// iteration, starting from gamma_1 = J grad H(y0), gamma_{j>1} = 0.
// Throws NonConvergence when the budget is exhausted or the iteration
// diverges, EvaluationFailure when the system cannot be evaluated.
StageCoefficients solve_stages(const HamiltonianSystem& sys, const State& y0,
                               double h, const HbvmTableau& tableau,
                               const SolverConfig& config = {});

// One step of the method: y1 = y0 + h * gamma_1.
State step(const HamiltonianSystem& sys, const State& y0, double h,
           const HbvmTableau& tableau, const SolverConfig& config = {});

// Equally spaced trajectory; states holds step_count()+1 entries starting
// with the initial state.
struct Trajectory {
    double t0 = 0.0;
    double h = 0.0;
    std::vector<State> states;

    long step_count() const { return static_cast<long>(states.size()) - 1; }
    double time_at(long n) const { return t0 + h * static_cast<double>(n); }
};

// Runs `n_steps` steps from y0.  Exceptions thrown by the stage solver
// are annotated with the zero-based index of the failing step and
// rethrown.
Trajectory integrate(const HamiltonianSystem& sys, const State& y0, double h,
                     long n_steps, const HbvmTableau& tableau,
                     const SolverConfig& config = {}, double t0 = 0.0);

}  // namespace hbvm

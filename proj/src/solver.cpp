#include "hbvm/solver.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "hbvm/errors.hpp"

namespace hbvm {

namespace {

// Beyond this the iteration is treated as divergent rather than letting
// stage values overflow into the system's evaluation functions.
constexpr double kDivergenceBound = 1e60;

double max_abs(const std::vector<State>& vs)
{
    double m = 0.0;
    for (const State& v : vs)
        for (double x : v)
            m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

StageCoefficients solve_stages(const HamiltonianSystem& sys, const State& y0,
                               double h, const HbvmTableau& tableau,
                               const SolverConfig& config)
{
    const int dim = sys.dimension();
    if (static_cast<int>(y0.size()) != dim)
        throw std::invalid_argument("solve_stages: state length does not match system");
    const int s = tableau.s;
    const int k = tableau.k;

    std::vector<State> gamma(s, State(dim, 0.0));
    gamma[0] = apply_symplectic(sys.gradient(y0));

    std::vector<State> next(s, State(dim, 0.0));
    State stage(dim);

    auto sweep = [&](const std::vector<State>& cur, std::vector<State>& out) {
        for (State& v : out)
            v.assign(dim, 0.0);
        for (int l = 0; l < k; ++l) {
            for (int i = 0; i < dim; ++i) {
                double acc = 0.0;
                for (int j = 0; j < s; ++j)
                    acc += tableau.integrated_basis[l][j] * cur[j][i];
                stage[i] = y0[i] + h * acc;
            }
            const State g = sys.gradient(stage);
            for (double x : g)
                if (!std::isfinite(x))
                    throw EvaluationFailure(
                        "solve_stages: gradient evaluated to a non-finite value");
            const State f = apply_symplectic(g);
            for (int j = 0; j < s; ++j) {
                const double c = tableau.rule.weights[l] * tableau.basis_at_nodes[l][j];
                for (int i = 0; i < dim; ++i)
                    out[j][i] += c * f[i];
            }
        }
    };

    StageCoefficients result;
    double delta = 0.0;
    for (int it = 1; it <= config.max_iterations; ++it) {
        sweep(gamma, next);

        delta = 0.0;
        for (int j = 0; j < s; ++j)
            for (int i = 0; i < dim; ++i)
                delta = std::max(delta, std::abs(next[j][i] - gamma[j][i]));
        const double norm = max_abs(next);
        gamma.swap(next);

        if (!std::isfinite(delta) || norm > kDivergenceBound)
            throw NonConvergence("solve_stages: stage iteration diverged", delta, it);

        if (delta <= config.abs_tol + config.rel_tol * norm) {
            // One polishing sweep: the coefficients are already within
            // tolerance, a final application of the map tightens them to
            // the fixed point's round-off plateau.
            sweep(gamma, next);
            gamma.swap(next);
            result.gamma = std::move(gamma);
            result.iterations = it + 1;
            result.residual = delta;
            return result;
        }
    }

    throw NonConvergence("solve_stages: no convergence within iteration budget",
                         delta, config.max_iterations);
}

State step(const HamiltonianSystem& sys, const State& y0, double h,
           const HbvmTableau& tableau, const SolverConfig& config)
{
    const StageCoefficients stages = solve_stages(sys, y0, h, tableau, config);
    State y1 = y0;
    for (std::size_t i = 0; i < y1.size(); ++i)
        y1[i] += h * stages.gamma[0][i];
    return y1;
}

Trajectory integrate(const HamiltonianSystem& sys, const State& y0, double h,
                     long n_steps, const HbvmTableau& tableau,
                     const SolverConfig& config, double t0)
{
    if (n_steps < 0)
        throw std::invalid_argument("integrate: step count must be >= 0");
    Trajectory traj;
    traj.t0 = t0;
    traj.h = h;
    traj.states.reserve(static_cast<std::size_t>(n_steps) + 1);
    traj.states.push_back(y0);
    for (long n = 0; n < n_steps; ++n) {
        try {
            traj.states.push_back(step(sys, traj.states.back(), h, tableau, config));
        } catch (NonConvergence& e) {
            e.step_index = n;
            throw;
        } catch (EvaluationFailure& e) {
            e.step_index = n;
            throw;
        }
    }
    return traj;
}

}  // namespace hbvm

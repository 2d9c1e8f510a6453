#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hbvm {

// Phase-space state laid out as (q_1..q_m, p_1..p_m).
using State = std::vector<double>;

// A conserved quantity evaluated along trajectories for drift reporting.
struct NamedInvariant {
    std::string name;
    std::function<double(const State&)> value;
};

// A canonical Hamiltonian system with m degrees of freedom.  The gradient
// is with respect to the full state, ordered (dH/dq, dH/dp).  poly_degree
// is set when H is polynomial in the state; it drives the choice of
// quadrature order that makes the energy error vanish up to round-off.
struct HamiltonianSystem {
    int dof = 0;
    std::function<double(const State&)> hamiltonian;
    std::function<State(const State&)> gradient;
    std::optional<int> poly_degree;
    std::vector<NamedInvariant> invariants;

    int dimension() const { return 2 * dof; }
};

// out = J * g where J = [[0, I], [-I, 0]] in (q,p) block ordering, i.e.
// out_q = g_p and out_p = -g_q.  Throws std::invalid_argument when the
// input length is odd.
State apply_symplectic(const State& g);

// Largest componentwise difference between the analytic gradient and a
// central finite-difference estimate at the given state.  Validation
// helper used by tests.
double max_gradient_mismatch(const HamiltonianSystem& sys, const State& y,
                             double fd_step = 1e-6);

}  // namespace hbvm

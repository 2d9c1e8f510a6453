#pragma once

#include <vector>

#include "hbvm/system.hpp"

namespace hbvm {

// -------------------------------------------------------------------------
// Gravitational N-body problem in three space dimensions.
// H = 1/2 sum_i ||p_i||^2 / m_i  -  G sum_i sum_{j<i} m_i m_j / ||q_i - q_j||
// State layout: (q_1, ..., q_N, p_1, ..., p_N), each a 3-vector, so the
// state dimension is 6N.
// -------------------------------------------------------------------------

struct NBodyConfig {
    double G = 1.0;
    std::vector<double> masses;  // one positive mass per body, N >= 2
};

// Builds the system for the given configuration.  The Hamiltonian is not
// polynomial, so poly_degree stays unset.  Invariants: "hamiltonian" and
// "angular_momentum_norm" (Euclidean norm of sum_i q_i x p_i).  Gradient
// and Hamiltonian throw EvaluationFailure when two bodies come closer
// than 1e-12.
HamiltonianSystem nbody_system(const NBodyConfig& config);

// The three-body configuration of the bounded planetoid experiment: two
// unit-mass primaries and a 1e-5 planetoid, G = 1.
NBodyConfig sitnikov_config();

// Its initial state (18 components): primaries at (-5/2,0,0), (5/2,0,0)
// with opposite y-momenta -/+ sqrt(10)/20, planetoid at (0,0,1e-9) with
// z-momentum 1/2.  These are the literal reference values; the underlying
// Kepler elements (eccentricity 0.75, apocentre distance 5) are recorded
// in the README.
State sitnikov_initial_state();

// -------------------------------------------------------------------------
// Henon-Heiles: planar motion in the cubic potential
// U(q1,q2) = 1/2 (q1^2 + q2^2) + q1^2 q2 - q2^3 / 3,
// H = 1/2 (p1^2 + p2^2) + U(q1,q2).  Degree-3 polynomial Hamiltonian.
// -------------------------------------------------------------------------

HamiltonianSystem henon_heiles_system();

double henon_heiles_potential(double q1, double q2);

// Vertices of the equilateral stability triangle: (0,1) and
// (+-sqrt(3)/2, -1/2).  They are saddle points of U.
std::vector<std::vector<double>> henon_heiles_saddles();

// Energy level of the saddles; orbits with H below this value starting
// inside the triangle stay inside it.
double henon_heiles_escape_energy();

// Default initial state for the long-run stability experiment: q=(0,0.2),
// p1=0.3 and p2 fixed so the energy sits 2% below the escape value.
State henon_heiles_default_state();

// -------------------------------------------------------------------------
// Planar quintic system with a non-degenerate center at the origin:
// H(q,p) = A(p) + B(p) q + C(p) q^2 + D(p) q^3 with
//   A(p) = p^2 (1/2 + c3 p + b3 p^2 + a3 p^3)
//   B(p) = p^2 (c2 + b2 p + a2 p^2)
//   C(p) = 1/2 + c1 p + b1 p^2 + a1 p^3
//   D(p) = c0 + b0 p + a0 p^2
// Degree-5 polynomial Hamiltonian; state is (q, p).
// -------------------------------------------------------------------------

struct QuinticCoefficients {
    double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
    double b0 = 0, b1 = 0, b2 = 0, b3 = 0;
    double c0 = 0, c1 = 0, c2 = 0, c3 = 0;
};

// The benchmark coefficient set: a2 = b1 = b3 = c1 = c2 = 1, all others 0.
QuinticCoefficients benchmark_quintic_coefficients();

// Throws std::invalid_argument when a0..a3 are all zero (the Hamiltonian
// would degenerate below degree 5).
HamiltonianSystem quintic_system(const QuinticCoefficients& c);

// Saddle equilibria of the benchmark coefficient set, as (q, p) states.
State quintic_saddle_p1();
State quintic_saddle_p2();

// Energy of the separatrix through the first saddle for the benchmark
// coefficients: H(P1) = 9.050199350868576e-2.  The boundary of the period
// annulus around the origin lies on this level set.
double hstar_reference();

// -------------------------------------------------------------------------
// Harmonic oscillator H = (q^2 + p^2) / 2: quadratic sanity problem.
// -------------------------------------------------------------------------

HamiltonianSystem harmonic_oscillator_system();

}  // namespace hbvm

#pragma once

#include <complex>
#include <vector>

#include "hbvm/quadrature.hpp"

namespace hbvm {

// Coefficients of the k-node, s-stage method.  Row index runs over the
// quadrature nodes, column index over the s basis polynomials (so both
// tables are k x s):
//   basis_at_nodes[l][j]   = P_{j+1}(c_l)
//   integrated_basis[l][j] = integral of P_{j+1} over [0, c_l]
//   end_integrals[j]       = integral of P_{j+1} over [0, 1]  (= 1,0,...,0)
struct HbvmTableau {
    int s = 0;
    int k = 0;
    QuadratureRule rule;
    std::vector<std::vector<double>> basis_at_nodes;
    std::vector<std::vector<double>> integrated_basis;
    std::vector<double> end_integrals;
};

// Builds the tableau for s polynomial stages discretised on k Gauss
// nodes.  Requires 1 <= s <= k; throws std::invalid_argument otherwise.
HbvmTableau build_tableau(int k, int s);

// Smallest k for which a Hamiltonian of polynomial degree nu is conserved
// exactly (up to round-off) by the s-stage method: the quadrature must
// integrate polynomials of degree nu*s, so k = max(s, ceil(nu*s / 2)).
int min_silent_k(int poly_degree, int s);

// The method written as a conventional k-stage Runge-Kutta scheme:
//   matrix[i][l] = omega_l * sum_j integrated_basis[i][j] * basis_at_nodes[l][j]
// with weights b = omega and abscissae c.
struct RungeKuttaForm {
    std::vector<double> abscissae;
    std::vector<double> weights;
    std::vector<std::vector<double>> matrix;
};

RungeKuttaForm as_runge_kutta(const HbvmTableau& tableau);

// Linear stability function R(z) = 1 + z b^T (I - z M)^{-1} 1 evaluated
// through a dense complex solve.  Throws std::runtime_error when I - z M
// is singular at the requested z.
std::complex<double> stability_value(const HbvmTableau& tableau,
                                     std::complex<double> z);

}  // namespace hbvm

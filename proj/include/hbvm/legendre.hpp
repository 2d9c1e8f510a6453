#ifndef HBVM_LEGENDRE_HPP
#define HBVM_LEGENDRE_HPP

#include <vector>

namespace hbvm {

/// Samples of the orthonormal shifted Legendre basis {P_j} on [0,1] at a
/// fixed set of points.  Indices are 1-based: P_1 is the constant polynomial
/// 1 and P_j has degree j-1, unit L2 norm on [0,1] and positive leading
/// coefficient.  values[j-1][l] = P_j(points[l]) and
/// integrals[j-1][l] = integral of P_j from 0 to points[l].
struct BasisValueTable {
    int degree_count = 0;
    std::vector<double> points;
    std::vector<std::vector<double>> values;
    std::vector<std::vector<double>> integrals;
};

/// P_j(x) for j >= 1, x in [0,1].  Throws std::domain_error otherwise
/// (x may stray outside [0,1] by at most 1e-12).
double eval_basis(int j, double x);

/// Integral of P_j from 0 to c.  Same domain rules as eval_basis.
double eval_basis_integral(int j, double c);

/// Evaluate the first s basis polynomials and their running integrals at the
/// given points.
BasisValueTable tabulate_basis(int s, const std::vector<double>& points);

}  // namespace hbvm

#endif

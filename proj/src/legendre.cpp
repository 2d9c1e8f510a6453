#include "hbvm/legendre.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hbvm {

namespace {

constexpr double kDomainSlack = 1e-12;

void check_domain(int j, double x, const char* where)
{
    if (j < 1)
        throw std::domain_error(std::string(where) + ": basis index must be >= 1");
    if (!(x >= -kDomainSlack && x <= 1.0 + kDomainSlack))
        throw std::domain_error(std::string(where) + ": argument outside [0,1]");
}

// Legendre polynomial of degree n at t in [-1,1] via the three-term
// recurrence (n+1) L_{n+1} = (2n+1) t L_n - n L_{n-1}.
double legendre(int n, double t)
{
    if (n == 0) return 1.0;
    double lm = 1.0, l = t;
    for (int d = 1; d < n; ++d) {
        const double lp = ((2 * d + 1) * t * l - d * lm) / (d + 1);
        lm = l;
        l = lp;
    }
    return l;
}

}  // namespace

double eval_basis(int j, double x)
{
    check_domain(j, x, "eval_basis");
    const int n = j - 1;
    if (n == 0) return 1.0;
    return std::sqrt(2.0 * n + 1.0) * legendre(n, 2.0 * x - 1.0);
}

double eval_basis_integral(int j, double c)
{
    check_domain(j, c, "eval_basis_integral");
    if (j == 1) return c;
    // The antiderivative of the degree-n Legendre polynomial is
    // (L_{n+1} - L_{n-1}) / (2n+1), and both neighbors vanish against the
    // lower limit; with the orthonormal scaling the integral collapses to
    // the closed form below.
    const int n = j - 1;
    const double t = 2.0 * c - 1.0;
    return (legendre(n + 1, t) - legendre(n - 1, t)) /
           (2.0 * std::sqrt(2.0 * n + 1.0));
}

BasisValueTable tabulate_basis(int s, const std::vector<double>& points)
{
    if (s < 1)
        throw std::domain_error("tabulate_basis: degree count must be >= 1");
    BasisValueTable table;
    table.degree_count = s;
    table.points = points;
    table.values.assign(s, std::vector<double>(points.size()));
    table.integrals.assign(s, std::vector<double>(points.size()));
    for (int j = 1; j <= s; ++j) {
        for (std::size_t l = 0; l < points.size(); ++l) {
            table.values[j - 1][l] = eval_basis(j, points[l]);
            table.integrals[j - 1][l] = eval_basis_integral(j, points[l]);
        }
    }
    return table;
}

}  // namespace hbvm

#include "hbvm/tableau.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "hbvm/legendre.hpp"

namespace hbvm {

HbvmTableau build_tableau(int k, int s)
{
    if (s < 1)
        throw std::invalid_argument("build_tableau: stage count must be >= 1");
    if (k < s)
        throw std::invalid_argument("build_tableau: node count must be >= stage count");

    HbvmTableau t;
    t.s = s;
    t.k = k;
    t.rule = gauss_rule(k);

    const BasisValueTable table = tabulate_basis(s, t.rule.nodes);
    t.basis_at_nodes.assign(k, std::vector<double>(s));
    t.integrated_basis.assign(k, std::vector<double>(s));
    for (int l = 0; l < k; ++l)
        for (int j = 0; j < s; ++j) {
            t.basis_at_nodes[l][j] = table.values[j][l];
            t.integrated_basis[l][j] = table.integrals[j][l];
        }

    t.end_integrals.resize(s);
    for (int j = 1; j <= s; ++j)
        t.end_integrals[j - 1] = eval_basis_integral(j, 1.0);
    return t;
}

int min_silent_k(int poly_degree, int s)
{
    if (poly_degree < 1 || s < 1)
        throw std::invalid_argument("min_silent_k: degree and stage count must be >= 1");
    const int quadrature_need = (poly_degree * s + 1) / 2;
    return std::max(s, quadrature_need);
}

RungeKuttaForm as_runge_kutta(const HbvmTableau& tableau)
{
    const int k = tableau.k;
    const int s = tableau.s;
    RungeKuttaForm rk;
    rk.abscissae = tableau.rule.nodes;
    rk.weights = tableau.rule.weights;
    rk.matrix.assign(k, std::vector<double>(k, 0.0));
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) {
            double sum = 0.0;
            for (int j = 0; j < s; ++j)
                sum += tableau.integrated_basis[i][j] * tableau.basis_at_nodes[l][j];
            rk.matrix[i][l] = tableau.rule.weights[l] * sum;
        }
    return rk;
}

std::complex<double> stability_value(const HbvmTableau& tableau,
                                     std::complex<double> z)
{
    using C = std::complex<double>;
    const RungeKuttaForm rk = as_runge_kutta(tableau);
    const int k = tableau.k;

    // Solve (I - z M) x = 1 by Gaussian elimination with partial pivoting.
    std::vector<std::vector<C>> a(k, std::vector<C>(k));
    std::vector<C> x(k, C(1.0, 0.0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a[i][j] = (i == j ? C(1.0, 0.0) : C(0.0, 0.0)) - z * rk.matrix[i][j];

    for (int col = 0; col < k; ++col) {
        int pivot = col;
        for (int row = col + 1; row < k; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col]))
                pivot = row;
        if (std::abs(a[pivot][col]) == 0.0)
            throw std::runtime_error("stability_value: I - z M is singular");
        std::swap(a[col], a[pivot]);
        std::swap(x[col], x[pivot]);
        for (int row = col + 1; row < k; ++row) {
            const C factor = a[row][col] / a[col][col];
            for (int j = col; j < k; ++j)
                a[row][j] -= factor * a[col][j];
            x[row] -= factor * x[col];
        }
    }
    for (int row = k - 1; row >= 0; --row) {
        C sum = x[row];
        for (int j = row + 1; j < k; ++j)
            sum -= a[row][j] * x[j];
        x[row] = sum / a[row][row];
    }

    C dot(0.0, 0.0);
    for (int l = 0; l < k; ++l)
        dot += rk.weights[l] * x[l];
    return C(1.0, 0.0) + z * dot;
}

}  // namespace hbvm

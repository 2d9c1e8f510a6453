#include "hbvm/problems.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "hbvm/errors.hpp"

namespace hbvm {

namespace {

constexpr double kCollisionThreshold = 1e-12;

void check_nbody_config(const NBodyConfig& config)
{
    if (config.masses.size() < 2)
        throw std::invalid_argument("nbody_system: need at least two bodies");
    for (double m : config.masses)
        if (!(m > 0.0))
            throw std::invalid_argument("nbody_system: masses must be positive");
}

}  // namespace

HamiltonianSystem nbody_system(const NBodyConfig& config)
{
    check_nbody_config(config);
    const int n = static_cast<int>(config.masses.size());
    const double G = config.G;
    const std::vector<double> m = config.masses;

    auto separation = [](const State& y, int i, int j, double d[3]) {
        double r2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            d[a] = y[3 * i + a] - y[3 * j + a];
            r2 += d[a] * d[a];
        }
        const double r = std::sqrt(r2);
        if (r < kCollisionThreshold)
            throw EvaluationFailure("nbody: bodies closer than the collision threshold");
        return r;
    };

    HamiltonianSystem sys;
    sys.dof = 3 * n;

    sys.hamiltonian = [n, G, m, separation](const State& y) {
        double kinetic = 0.0;
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < 3; ++a) {
                const double p = y[3 * (n + i) + a];
                kinetic += p * p / m[i];
            }
        double potential = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                double d[3];
                potential -= G * m[i] * m[j] / separation(y, i, j, d);
            }
        return 0.5 * kinetic + potential;
    };

    sys.gradient = [n, G, m, separation](const State& y) {
        State g(6 * static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            for (int a = 0; a < 3; ++a)
                g[3 * (n + i) + a] = y[3 * (n + i) + a] / m[i];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) {
                double d[3];
                const double r = separation(y, i, j, d);
                const double scale = G * m[i] * m[j] / (r * r * r);
                for (int a = 0; a < 3; ++a) {
                    g[3 * i + a] += scale * d[a];
                    g[3 * j + a] -= scale * d[a];
                }
            }
        return g;
    };

    sys.invariants.push_back({"hamiltonian", sys.hamiltonian});
    sys.invariants.push_back({"angular_momentum_norm", [n](const State& y) {
        double L[3] = {0.0, 0.0, 0.0};
        for (int i = 0; i < n; ++i) {
            const double* q = &y[3 * i];
            const double* p = &y[3 * (n + i)];
            L[0] += q[1] * p[2] - q[2] * p[1];
            L[1] += q[2] * p[0] - q[0] * p[2];
            L[2] += q[0] * p[1] - q[1] * p[0];
        }
        return std::sqrt(L[0] * L[0] + L[1] * L[1] + L[2] * L[2]);
    }});
    return sys;
}

NBodyConfig sitnikov_config()
{
    return {1.0, {1.0, 1.0, 1e-5}};
}

State sitnikov_initial_state()
{
    const double py = std::sqrt(10.0) / 20.0;
    return {-2.5, 0.0, 0.0, 2.5, 0.0, 0.0, 0.0, 0.0, 1e-9,
            0.0, -py, 0.0,  0.0, py,  0.0, 0.0, 0.0, 0.5};
}

double henon_heiles_potential(double q1, double q2)
{
    return 0.5 * (q1 * q1 + q2 * q2) + q1 * q1 * q2 - q2 * q2 * q2 / 3.0;
}

HamiltonianSystem henon_heiles_system()
{
    HamiltonianSystem sys;
    sys.dof = 2;
    sys.poly_degree = 3;
    sys.hamiltonian = [](const State& y) {
        return 0.5 * (y[2] * y[2] + y[3] * y[3]) + henon_heiles_potential(y[0], y[1]);
    };
    sys.gradient = [](const State& y) {
        const double q1 = y[0], q2 = y[1];
        return State{q1 + 2.0 * q1 * q2, q2 + q1 * q1 - q2 * q2, y[2], y[3]};
    };
    sys.invariants.push_back({"hamiltonian", sys.hamiltonian});
    return sys;
}

std::vector<std::vector<double>> henon_heiles_saddles()
{
    const double r = std::sqrt(3.0) / 2.0;
    return {{0.0, 1.0}, {-r, -0.5}, {r, -0.5}};
}

double henon_heiles_escape_energy()
{
    return 1.0 / 6.0;
}

State henon_heiles_default_state()
{
    const double q1 = 0.0, q2 = 0.2, p1 = 0.3;
    const double energy = 0.98 * henon_heiles_escape_energy();
    const double p2 = std::sqrt(2.0 * (energy - henon_heiles_potential(q1, q2)) - p1 * p1);
    return {q1, q2, p1, p2};
}

QuinticCoefficients benchmark_quintic_coefficients()
{
    QuinticCoefficients c;
    c.a2 = 1.0;
    c.b1 = 1.0;
    c.b3 = 1.0;
    c.c1 = 1.0;
    c.c2 = 1.0;
    return c;
}

HamiltonianSystem quintic_system(const QuinticCoefficients& c)
{
    if (c.a0 == 0.0 && c.a1 == 0.0 && c.a2 == 0.0 && c.a3 == 0.0)
        throw std::invalid_argument(
            "quintic_system: a0..a3 all zero degenerates the Hamiltonian below degree 5");

    HamiltonianSystem sys;
    sys.dof = 1;
    sys.poly_degree = 5;
    sys.hamiltonian = [c](const State& y) {
        const double q = y[0], p = y[1];
        const double A = p * p * (0.5 + p * (c.c3 + p * (c.b3 + p * c.a3)));
        const double B = p * p * (c.c2 + p * (c.b2 + p * c.a2));
        const double C = 0.5 + p * (c.c1 + p * (c.b1 + p * c.a1));
        const double D = c.c0 + p * (c.b0 + p * c.a0);
        return A + q * (B + q * (C + q * D));
    };
    sys.gradient = [c](const State& y) {
        const double q = y[0], p = y[1];
        const double B = p * p * (c.c2 + p * (c.b2 + p * c.a2));
        const double C = 0.5 + p * (c.c1 + p * (c.b1 + p * c.a1));
        const double D = c.c0 + p * (c.b0 + p * c.a0);
        const double dA = p * (1.0 + p * (3.0 * c.c3 + p * (4.0 * c.b3 + p * 5.0 * c.a3)));
        const double dB = p * (2.0 * c.c2 + p * (3.0 * c.b2 + p * 4.0 * c.a2));
        const double dC = c.c1 + p * (2.0 * c.b1 + p * 3.0 * c.a1);
        const double dD = c.b0 + 2.0 * c.a0 * p;
        return State{B + q * (2.0 * C + q * 3.0 * D),
                     dA + q * (dB + q * (dC + q * dD))};
    };
    sys.invariants.push_back({"hamiltonian", sys.hamiltonian});
    return sys;
}

State quintic_saddle_p1()
{
    return {-6.879526475540134e-1, -5.206527058470621e-1};
}

State quintic_saddle_p2()
{
    return {-1.179582379893681, 1.756351969248087};
}

double hstar_reference()
{
    return 9.050199350868576e-2;
}

HamiltonianSystem harmonic_oscillator_system()
{
    HamiltonianSystem sys;
    sys.dof = 1;
    sys.poly_degree = 2;
    sys.hamiltonian = [](const State& y) { return 0.5 * (y[0] * y[0] + y[1] * y[1]); };
    sys.gradient = [](const State& y) { return State{y[0], y[1]}; };
    sys.invariants.push_back({"hamiltonian", sys.hamiltonian});
    return sys;
}

}  // namespace hbvm

#include "hbvm/system.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace hbvm {

State apply_symplectic(const State& g)
{
    if (g.size() % 2 != 0)
        throw std::invalid_argument("apply_symplectic: state length must be even");
    const std::size_t m = g.size() / 2;
    State out(g.size());
    for (std::size_t i = 0; i < m; ++i) {
        out[i] = g[m + i];
        out[m + i] = -g[i];
    }
    return out;
}

double max_gradient_mismatch(const HamiltonianSystem& sys, const State& y,
                             double fd_step)
{
    const State g = sys.gradient(y);
    double worst = 0.0;
    State probe = y;
    for (std::size_t i = 0; i < y.size(); ++i) {
        probe[i] = y[i] + fd_step;
        const double hi = sys.hamiltonian(probe);
        probe[i] = y[i] - fd_step;
        const double lo = sys.hamiltonian(probe);
        probe[i] = y[i];
        worst = std::max(worst, std::abs((hi - lo) / (2.0 * fd_step) - g[i]));
    }
    return worst;
}

}  // namespace hbvm

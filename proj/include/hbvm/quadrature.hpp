#ifndef HBVM_QUADRATURE_HPP
#define HBVM_QUADRATURE_HPP

#include <vector>

namespace hbvm {

/// Gauss-Legendre rule on [0,1]: k nodes strictly increasing in (0,1),
/// positive weights summing to 1, exact for polynomials of degree 2k-1.
struct QuadratureRule {
    int k = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// The k-node Gauss-Legendre rule on [0,1].  Rules are memoized per process;
/// the cache is safe for concurrent use.  Throws std::invalid_argument for
/// k < 1 and std::length_error for k > 512.
const QuadratureRule& gauss_rule(int k);

}  // namespace hbvm

#endif

#include "hbvm/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hbvm {

namespace {

constexpr int kMaxNodes = 512;
constexpr double kRootTolerance = 1e-15;
constexpr int kMaxNewtonIterations = 100;

// Legendre polynomial of degree k at t together with its derivative,
// via the three-term recurrence and (1-t^2) L_k' = k (L_{k-1} - t L_k).
struct PolyEval {
    double value;
    double derivative;
};

PolyEval legendre_with_derivative(int k, double t)
{
    double lm = 1.0, l = t;
    for (int d = 1; d < k; ++d) {
        const double lp = ((2 * d + 1) * t * l - d * lm) / (d + 1);
        lm = l;
        l = lp;
    }
    return {l, k * (lm - t * l) / (1.0 - t * t)};
}

QuadratureRule compute_rule(int k)
{
    QuadratureRule rule;
    rule.k = k;
    rule.nodes.resize(k);
    rule.weights.resize(k);

    // Roots of L_k on (-1,1) come in symmetric pairs; compute the positive
    // half from cosine initial guesses and mirror, so the [0,1] rule is
    // symmetric to the last bit.
    const int half = k / 2;
    for (int i = 1; i <= half; ++i) {
        double t = std::cos(M_PI * (i - 0.25) / (k + 0.5));
        PolyEval e{};
        bool converged = false;
        for (int it = 0; it < kMaxNewtonIterations; ++it) {
            e = legendre_with_derivative(k, t);
            const double dt = e.value / e.derivative;
            t -= dt;
            if (std::abs(dt) <= kRootTolerance) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("gauss_rule: Newton iteration stalled");
        e = legendre_with_derivative(k, t);
        const double w = 2.0 / ((1.0 - t * t) * e.derivative * e.derivative);
        rule.nodes[k - i] = 0.5 * (1.0 + t);
        rule.nodes[i - 1] = 0.5 * (1.0 - t);
        rule.weights[k - i] = 0.5 * w;
        rule.weights[i - 1] = 0.5 * w;
    }
    if (k % 2 == 1) {
        const PolyEval e = legendre_with_derivative(k, 0.0);
        rule.nodes[half] = 0.5;
        rule.weights[half] = 1.0 / (e.derivative * e.derivative);
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_rule(int k)
{
    if (k < 1)
        throw std::invalid_argument("gauss_rule: node count must be >= 1");
    if (k > kMaxNodes)
        throw std::length_error("gauss_rule: node count capped at 512");

    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const QuadratureRule>> cache;

    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[k];
    if (!slot)
        slot = std::make_unique<const QuadratureRule>(compute_rule(k));
    return *slot;
}

}  // namespace hbvm

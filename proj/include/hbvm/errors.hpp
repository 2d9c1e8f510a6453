#ifndef HBVM_ERRORS_HPP
#define HBVM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hbvm {

// Stage iteration ran out of budget, or diverged, before meeting tolerance.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double residual_, int iterations_,
                   long step_index_ = -1)
        : std::runtime_error(what), residual(residual_),
          iterations(iterations_), step_index(step_index_) {}

    double residual;  // last max-norm update of the stage coefficients
    int iterations;
    long step_index;  // set by integrate(), -1 otherwise
};

// A Hamiltonian or gradient evaluation produced a non-finite value, e.g. an
// N-body close encounter below the collision threshold.
class EvaluationFailure : public std::runtime_error {
public:
    explicit EvaluationFailure(const std::string& what, long step_index_ = -1)
        : std::runtime_error(what), step_index(step_index_) {}

    long step_index;
};

}  // namespace hbvm

#endif

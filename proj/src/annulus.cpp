#include "hbvm/annulus.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "hbvm/errors.hpp"

namespace hbvm {

namespace {

double distance_from(const State& y, const State& center)
{
    double d = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double ci = center.empty() ? 0.0 : center[i];
        d = std::max(d, std::abs(y[i] - ci));
    }
    return d;
}

State blend(const State& P0, const State& Q, double c)
{
    State y(P0.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = (1.0 - c) * P0[i] + c * Q[i];
    return y;
}

}  // namespace

EscapeResult orbit_escapes(const Trajectory& traj, const EscapeCriterion& criterion)
{
    if (traj.states.empty())
        throw std::invalid_argument("orbit_escapes: empty trajectory");
    const long every = criterion.check_every < 1 ? 1 : criterion.check_every;
    const long last = traj.step_count();
    for (long n = 0; n <= last; ++n) {
        if (n % every != 0 && n != last)
            continue;
        if (distance_from(traj.states[static_cast<std::size_t>(n)], criterion.center)
            > criterion.radius)
            return {true, n};
    }
    return {false, -1};
}

BisectionResult bisect_boundary(const HamiltonianSystem& sys, const State& P0,
                                const State& Q, const IntegratorParams& params,
                                double tol, const EscapeCriterion& criterion)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("bisect_boundary: tolerance must be positive");
    if (static_cast<int>(P0.size()) != sys.dimension()
        || static_cast<int>(Q.size()) != sys.dimension())
        throw std::invalid_argument("bisect_boundary: endpoint dimension mismatch");

    EscapeCriterion crit = criterion;
    if (crit.center.empty())
        crit.center = P0;
    if (!(crit.radius > distance_from(Q, crit.center)))
        throw std::invalid_argument(
            "bisect_boundary: escape radius must exceed the distance from the center to Q");

    const HbvmTableau tableau = build_tableau(params.k, params.s);
    const long every = crit.check_every < 1 ? 1 : crit.check_every;

    BisectionResult result;

    // Integrates from gamma(c), stopping at the first sampled state beyond
    // the escape radius.  A diverging stage iteration counts as escaped.
    auto probe = [&](double c) {
        ProbeRecord record;
        record.c = c;
        State y = blend(P0, Q, c);
        for (long n = 0; n < params.steps; ++n) {
            try {
                y = step(sys, y, params.h, tableau, params.solver);
            } catch (const NonConvergence&) {
                record.escaped = true;
                record.escape_index = n;
                record.nonconvergence = true;
                break;
            }
            record.steps_run = n + 1;
            if ((n + 1) % every == 0 || n + 1 == params.steps) {
                if (distance_from(y, crit.center) > crit.radius) {
                    record.escaped = true;
                    record.escape_index = n + 1;
                    break;
                }
            }
        }
        result.log.push_back(record);
        return record.escaped;
    };

    if (!probe(1.0))
        throw std::invalid_argument("bisect_boundary: the probe at c=1 does not escape");
    if (probe(0.0))
        throw std::invalid_argument("bisect_boundary: the probe at c=0 escapes");

    double c_low = 0.0, c_high = 1.0;
    while (c_high - c_low > tol) {
        const double c = 0.5 * (c_low + c_high);
        if (c <= c_low || c >= c_high)
            break;  // bracket narrowed to adjacent doubles
        if (probe(c))
            c_high = c;
        else
            c_low = c;
    }

    result.c_low = c_low;
    result.c_high = c_high;
    result.boundary_point = blend(P0, Q, c_low);
    result.probes = static_cast<int>(result.log.size());
    return result;
}

}  // namespace hbvm

#include "hbvm/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace hbvm {

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj)
{
    const std::size_t dim = traj.states.empty() ? 0 : traj.states.front().size();
    out << 't';
    for (std::size_t i = 1; i <= dim; ++i)
        out << ",y" << i;
    out << '\n';
    for (long n = 0; n <= traj.step_count(); ++n) {
        out << format_double(traj.time_at(n));
        for (double x : traj.states[static_cast<std::size_t>(n)])
            out << ',' << format_double(x);
        out << '\n';
    }
}

Trajectory read_trajectory_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("read_trajectory_csv: missing header");

    Trajectory traj;
    std::vector<double> times;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        std::stringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            char* end = nullptr;
            const double value = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str())
                throw std::runtime_error("read_trajectory_csv: bad numeric cell '" + cell + "'");
            row.push_back(value);
        }
        if (row.size() < 2)
            throw std::runtime_error("read_trajectory_csv: row too short");
        times.push_back(row.front());
        traj.states.emplace_back(row.begin() + 1, row.end());
    }
    if (traj.states.empty())
        throw std::runtime_error("read_trajectory_csv: no data rows");
    traj.t0 = times.front();
    traj.h = times.size() > 1 ? times[1] - times[0] : 0.0;
    return traj;
}

void write_drift_csv(std::ostream& out, const Trajectory& traj,
                     const std::vector<DriftReport>& reports)
{
    out << 't';
    for (const DriftReport& r : reports)
        out << ',' << r.invariant << (r.absolute ? "_abs_err" : "_rel_err");
    out << '\n';
    for (long n = 0; n <= traj.step_count(); ++n) {
        out << format_double(traj.time_at(n));
        for (const DriftReport& r : reports)
            out << ',' << format_double(r.errors[static_cast<std::size_t>(n)]);
        out << '\n';
    }
}

}  // namespace hbvm

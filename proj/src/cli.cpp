#include "hbvm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hbvm/annulus.hpp"
#include "hbvm/drift.hpp"
#include "hbvm/errors.hpp"
#include "hbvm/io.hpp"
#include "hbvm/problems.hpp"
#include "hbvm/solver.hpp"
#include "hbvm/tableau.hpp"

namespace hbvm::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNonConvergence = 3;
constexpr int kExitEvaluationFailure = 4;

struct ProblemChoice {
    HamiltonianSystem system;
    State default_y0;
};

ProblemChoice make_problem(const std::string& name)
{
    if (name == "harmonic")
        return {harmonic_oscillator_system(), {1.0, 0.0}};
    if (name == "sitnikov")
        return {nbody_system(sitnikov_config()), sitnikov_initial_state()};
    if (name == "henon-heiles")
        return {henon_heiles_system(), henon_heiles_default_state()};
    if (name == "quintic")
        return {quintic_system(benchmark_quintic_coefficients()), {0.0, 0.3}};
    throw std::invalid_argument("unknown problem '" + name + "' (expected harmonic, "
                                "sitnikov, henon-heiles or quintic)");
}

json solver_manifest(const SolverConfig& config)
{
    return {{"abs_tol", config.abs_tol},
            {"rel_tol", config.rel_tol},
            {"max_iter", config.max_iterations}};
}

void write_text_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << text;
}

void write_manifest(const fs::path& dir, json manifest)
{
    manifest["determinism"] =
        "seed-free; identical flags reproduce byte-identical outputs";
    write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

// ---------------------------------------------------------------- tableau

struct TableauFlags {
    int s = 1;
    int k = 1;
    std::string format = "csv";
};

int cmd_tableau(const TableauFlags& flags)
{
    const HbvmTableau tableau = build_tableau(flags.k, flags.s);
    const RungeKuttaForm rk = as_runge_kutta(tableau);

    if (flags.format == "json") {
        json doc{{"s", tableau.s},
                 {"k", tableau.k},
                 {"c", rk.abscissae},
                 {"omega", rk.weights},
                 {"integrated_basis", tableau.integrated_basis},
                 {"rk_matrix", rk.matrix},
                 {"rk_weights", rk.weights}};
        std::cout << doc.dump(2) << '\n';
        return kExitOk;
    }

    std::cout << "c,omega";
    for (int j = 1; j <= tableau.s; ++j)
        std::cout << ",A" << j;
    for (int l = 1; l <= tableau.k; ++l)
        std::cout << ",M" << l;
    std::cout << '\n';
    for (int i = 0; i < tableau.k; ++i) {
        std::cout << format_double(rk.abscissae[i]) << ','
                  << format_double(rk.weights[i]);
        for (int j = 0; j < tableau.s; ++j)
            std::cout << ',' << format_double(tableau.integrated_basis[i][j]);
        for (int l = 0; l < tableau.k; ++l)
            std::cout << ',' << format_double(rk.matrix[i][l]);
        std::cout << '\n';
    }
    return kExitOk;
}

// -------------------------------------------------------------- integrate

struct IntegrateFlags {
    std::string problem;
    int s = 1;
    int k = 1;
    double h = 0.1;
    long steps = 100;
    std::vector<double> y0;
    std::vector<std::string> drift;
    std::string out = ".";
    SolverConfig solver;
};

std::vector<NamedInvariant> select_invariants(const HamiltonianSystem& sys,
                                              const std::vector<std::string>& names)
{
    if (names.empty())
        return sys.invariants;
    std::vector<NamedInvariant> chosen;
    for (const std::string& name : names) {
        const auto it = std::find_if(sys.invariants.begin(), sys.invariants.end(),
                                     [&](const NamedInvariant& inv) { return inv.name == name; });
        if (it == sys.invariants.end())
            throw std::invalid_argument("unknown invariant '" + name + "'");
        chosen.push_back(*it);
    }
    return chosen;
}

int cmd_integrate(const IntegrateFlags& flags)
{
    ProblemChoice problem = make_problem(flags.problem);
    State y0 = flags.y0.empty() ? problem.default_y0 : State(flags.y0);
    if (static_cast<int>(y0.size()) != problem.system.dimension())
        throw std::invalid_argument("--y0 must supply exactly "
                                    + std::to_string(problem.system.dimension())
                                    + " components");
    const std::vector<NamedInvariant> invariants =
        select_invariants(problem.system, flags.drift);
    const HbvmTableau tableau = build_tableau(flags.k, flags.s);

    const fs::path dir(flags.out);
    fs::create_directories(dir);

    Trajectory traj;
    traj.t0 = 0.0;
    traj.h = flags.h;
    traj.states.push_back(y0);

    int rc = kExitOk;
    std::string status = "ok";
    long failing_step = -1;
    std::string failure;
    for (long n = 0; n < flags.steps; ++n) {
        try {
            traj.states.push_back(
                step(problem.system, traj.states.back(), flags.h, tableau, flags.solver));
        } catch (const NonConvergence& e) {
            rc = kExitNonConvergence;
            status = "nonconvergence";
            failing_step = n;
            failure = e.what();
            break;
        } catch (const EvaluationFailure& e) {
            rc = kExitEvaluationFailure;
            status = "evaluation_failure";
            failing_step = n;
            failure = e.what();
            break;
        }
    }

    {
        std::ostringstream text;
        write_trajectory_csv(text, traj);
        write_text_file(dir / "trajectory.csv", text.str());
    }
    {
        // When the stored states themselves defeat invariant evaluation
        // (e.g. a collision in the initial state), still emit the file so a
        // failed run leaves a complete artifact set.
        std::ostringstream text;
        try {
            write_drift_csv(text, traj, drift_reports(traj, invariants));
        } catch (const EvaluationFailure&) {
            text.str("");
            write_drift_csv(text, traj, {});
        }
        write_text_file(dir / "drift.csv", text.str());
    }

    json manifest{{"problem", flags.problem},
                  {"s", flags.s},
                  {"k", flags.k},
                  {"h", flags.h},
                  {"steps", flags.steps},
                  {"steps_completed", traj.step_count()},
                  {"solver", solver_manifest(flags.solver)},
                  {"status", status},
                  {"outputs", {"trajectory.csv", "drift.csv"}}};
    if (failing_step >= 0) {
        manifest["failing_step"] = failing_step;
        manifest["failure"] = failure;
    }
    write_manifest(dir, manifest);

    if (rc != kExitOk)
        std::cerr << "integration aborted at step " << failing_step << ": "
                  << failure << '\n';
    return rc;
}

// ------------------------------------------------------------ convergence

struct ConvergenceFlags {
    std::string problem;
    int s = 2;
    int k = 2;
    double h0 = 0.25;
    int levels = 3;
    double t_end = 1.0;
    SolverConfig solver;
};

long exact_step_count(double t_end, double h)
{
    const double ratio = t_end / h;
    const long steps = std::lround(ratio);
    if (steps < 1 || std::abs(ratio - static_cast<double>(steps)) > 1e-9 * ratio)
        throw std::invalid_argument("--t-end must be an integer multiple of every "
                                    "refined stepsize");
    return steps;
}

int cmd_convergence(const ConvergenceFlags& flags)
{
    if (flags.levels < 2)
        throw std::invalid_argument("--levels must be at least 2");
    const ProblemChoice problem = make_problem(flags.problem);
    const HbvmTableau tableau = build_tableau(flags.k, flags.s);

    const double h_ref = flags.h0 / std::pow(2.0, flags.levels + 2);
    const Trajectory reference =
        integrate(problem.system, problem.default_y0, h_ref,
                  exact_step_count(flags.t_end, h_ref), tableau, flags.solver);
    const State& terminal_ref = reference.states.back();

    std::vector<double> errors;
    std::vector<double> stepsizes;
    for (int level = 0; level < flags.levels; ++level) {
        const double h = flags.h0 / std::pow(2.0, level);
        const Trajectory traj =
            integrate(problem.system, problem.default_y0, h,
                      exact_step_count(flags.t_end, h), tableau, flags.solver);
        double err = 0.0;
        const State& terminal = traj.states.back();
        for (std::size_t i = 0; i < terminal.size(); ++i)
            err = std::max(err, std::abs(terminal[i] - terminal_ref[i]));
        stepsizes.push_back(h);
        errors.push_back(err);
    }

    std::cout << "h,error,observed_order\n";
    for (int level = 0; level < flags.levels; ++level) {
        std::cout << format_double(stepsizes[level]) << ','
                  << format_double(errors[level]) << ',';
        if (level > 0)
            std::cout << format_double(std::log2(errors[level - 1] / errors[level]));
        std::cout << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- annulus

struct AnnulusFlags {
    int s = 2;
    int k = 5;
    double h = 1.0;
    long steps = 2500;
    double tol = std::pow(2.0, -52);
    double escape_radius = 2.0;
    long check_every = 1;
    std::string out = ".";
    SolverConfig solver;
};

int cmd_annulus(const AnnulusFlags& flags)
{
    const HamiltonianSystem sys = quintic_system(benchmark_quintic_coefficients());
    const State P0{0.0, 0.0};
    const State Q{0.0, 1.0};

    IntegratorParams params;
    params.s = flags.s;
    params.k = flags.k;
    params.h = flags.h;
    params.steps = flags.steps;
    params.solver = flags.solver;

    EscapeCriterion criterion;
    criterion.radius = flags.escape_radius;
    criterion.check_every = flags.check_every;

    const BisectionResult result =
        bisect_boundary(sys, P0, Q, params, flags.tol, criterion);

    const double energy = sys.hamiltonian(result.boundary_point);
    const double hstar = hstar_reference();
    const double h_rel_err = std::abs(energy - hstar) / hstar;

    const fs::path dir(flags.out);
    fs::create_directories(dir);

    {
        std::ostringstream text;
        text << "c,escaped,steps_run,escape_index,nonconvergence\n";
        for (const ProbeRecord& probe : result.log)
            text << format_double(probe.c) << ',' << (probe.escaped ? 1 : 0) << ','
                 << probe.steps_run << ',' << probe.escape_index << ','
                 << (probe.nonconvergence ? 1 : 0) << '\n';
        write_text_file(dir / "probes.csv", text.str());
    }
    {
        json doc{{"c_low", result.c_low},
                 {"c_high", result.c_high},
                 {"y0", result.boundary_point},
                 {"probes", result.probes},
                 {"boundary_energy", energy},
                 {"hstar", hstar},
                 {"h_rel_err", h_rel_err},
                 {"tol", flags.tol},
                 {"escape_radius", flags.escape_radius}};
        write_text_file(dir / "result.json", doc.dump(2) + "\n");
    }
    json manifest{{"problem", "quintic"},
                  {"s", flags.s},
                  {"k", flags.k},
                  {"h", flags.h},
                  {"steps", flags.steps},
                  {"tol", flags.tol},
                  {"escape_radius", flags.escape_radius},
                  {"solver", solver_manifest(flags.solver)},
                  {"status", "ok"},
                  {"outputs", {"probes.csv", "result.json"}}};
    write_manifest(dir, manifest);

    std::cout << "y0 = (" << format_double(result.boundary_point[0]) << ", "
              << format_double(result.boundary_point[1]) << ")\n"
              << "H(y0) = " << format_double(energy) << '\n'
              << "relative energy error vs separatrix level = "
              << format_double(h_rel_err) << '\n'
              << "probes = " << result.probes << '\n';
    return kExitOk;
}

// The stepsize flag is spelled --h, so the default short help flag -h must
// not be registered anywhere in the command tree.
CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& desc)
{
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print this help message and exit");
    return cmd;
}

void add_solver_flags(CLI::App* cmd, SolverConfig& config)
{
    cmd->add_option("--abs-tol", config.abs_tol, "stage-iteration absolute tolerance");
    cmd->add_option("--rel-tol", config.rel_tol, "stage-iteration relative tolerance");
    cmd->add_option("--max-iter", config.max_iterations, "stage-iteration budget");
}

}  // namespace

int run(std::vector<std::string> args)
{
    CLI::App app{"Energy-preserving integrators for Hamiltonian systems"};
    app.name("hbvm");
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    TableauFlags tableau_flags;
    CLI::App* tableau_cmd =
        add_command(app, "tableau", "print method coefficients and the RK form");
    tableau_cmd->add_option("--s", tableau_flags.s, "stage count")->required();
    tableau_cmd->add_option("--k", tableau_flags.k, "quadrature node count")->required();
    tableau_cmd->add_option("--format", tableau_flags.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    IntegrateFlags integrate_flags;
    CLI::App* integrate_cmd =
        add_command(app, "integrate", "run a fixed-step integration, write CSV");
    integrate_cmd->add_option("--problem", integrate_flags.problem,
                              "harmonic | sitnikov | henon-heiles | quintic")->required();
    integrate_cmd->add_option("--s", integrate_flags.s, "stage count")->required();
    integrate_cmd->add_option("--k", integrate_flags.k, "quadrature node count")->required();
    integrate_cmd->add_option("--h", integrate_flags.h, "stepsize")->required();
    integrate_cmd->add_option("--steps", integrate_flags.steps, "step count")->required();
    integrate_cmd->add_option("--y0", integrate_flags.y0,
                              "initial state override (comma-separated)")->delimiter(',');
    integrate_cmd->add_option("--drift", integrate_flags.drift,
                              "invariants to report (default: all)")->delimiter(',');
    integrate_cmd->add_option("--out", integrate_flags.out, "output directory");
    add_solver_flags(integrate_cmd, integrate_flags.solver);

    ConvergenceFlags convergence_flags;
    CLI::App* convergence_cmd =
        add_command(app, "convergence", "stepsize-halving order study");
    convergence_cmd->add_option("--problem", convergence_flags.problem)->required();
    convergence_cmd->add_option("--s", convergence_flags.s)->required();
    convergence_cmd->add_option("--k", convergence_flags.k)->required();
    convergence_cmd->add_option("--h0", convergence_flags.h0, "coarsest stepsize");
    convergence_cmd->add_option("--levels", convergence_flags.levels, "halving levels (>= 2)");
    convergence_cmd->add_option("--t-end", convergence_flags.t_end, "integration end time");
    add_solver_flags(convergence_cmd, convergence_flags.solver);

    AnnulusFlags annulus_flags;
    CLI::App* annulus_cmd = add_command(
        app, "annulus", "dichotomic search for the bounded-orbit boundary of the quintic system");
    annulus_cmd->add_option("--s", annulus_flags.s)->required();
    annulus_cmd->add_option("--k", annulus_flags.k)->required();
    annulus_cmd->add_option("--h", annulus_flags.h, "stepsize");
    annulus_cmd->add_option("--steps", annulus_flags.steps, "steps per probe");
    annulus_cmd->add_option("--tol", annulus_flags.tol, "bracket width tolerance");
    annulus_cmd->add_option("--escape-radius", annulus_flags.escape_radius,
                            "max-norm escape distance from the center");
    annulus_cmd->add_option("--check-every", annulus_flags.check_every,
                            "escape check cadence in steps");
    annulus_cmd->add_option("--out", annulus_flags.out, "output directory");
    add_solver_flags(annulus_cmd, annulus_flags.solver);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (tableau_cmd->parsed())
            return cmd_tableau(tableau_flags);
        if (integrate_cmd->parsed())
            return cmd_integrate(integrate_flags);
        if (convergence_cmd->parsed())
            return cmd_convergence(convergence_flags);
        if (annulus_cmd->parsed())
            return cmd_annulus(annulus_flags);
    } catch (const NonConvergence& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNonConvergence;
    } catch (const EvaluationFailure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEvaluationFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace hbvm::cli

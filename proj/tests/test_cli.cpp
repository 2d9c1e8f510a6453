#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "hbvm/cli.hpp"
#include "hbvm/io.hpp"
#include "hbvm/problems.hpp"
#include "hbvm/solver.hpp"
#include "hbvm/tableau.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
    std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
    CliResult result;
    try {
        result.code = hbvm::cli::run(std::move(args));
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

// Unique scratch directory under the test runner's working directory.
struct ScratchDir {
    fs::path path;

    explicit ScratchDir(const std::string& tag)
        : path(fs::path("cli_scratch") / tag)
    {
        fs::remove_all(path);
        fs::create_directories(path);
    }

    ~ScratchDir()
    {
        fs::remove_all(path);
        std::error_code ignored;
        fs::remove(path.parent_path(), ignored);  // only succeeds when empty
    }

    std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

json slurp_json(const fs::path& p) { return json::parse(slurp(p)); }

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ','))
        fields.push_back(field);
    if (!line.empty() && line.back() == ',')
        fields.push_back("");
    return fields;
}

}  // namespace

TEST_CASE("tableau: midpoint coefficients print exactly")
{
    const CliResult r = run_cli({"tableau", "--s", "1", "--k", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "c,omega,A1,M1\n0.5,1,0.5,0.5\n");
}

TEST_CASE("tableau: json output round-trips the RK form")
{
    const CliResult r = run_cli({"tableau", "--s", "2", "--k", "4", "--format", "json"});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["s"] == 2);
    CHECK(doc["k"] == 4);

    const auto rk = hbvm::as_runge_kutta(hbvm::build_tableau(4, 2));
    REQUIRE(doc["c"].size() == 4);
    REQUIRE(doc["rk_matrix"].size() == 4);
    REQUIRE(doc["rk_weights"].size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(doc["c"][i].get<double>() == rk.abscissae[i]);
        CHECK(doc["omega"][i].get<double>() == rk.weights[i]);
        CHECK(doc["rk_weights"][i].get<double>() == rk.weights[i]);
        REQUIRE(doc["rk_matrix"][i].size() == 4);
        for (int l = 0; l < 4; ++l)
            CHECK(doc["rk_matrix"][i][l].get<double>() == rk.matrix[i][l]);
    }
    REQUIRE(doc["integrated_basis"].size() == 4);
    CHECK(doc["integrated_basis"][0].size() == 2);
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run_cli({"tableau", "--s", "3", "--k", "2"}).code == 2);
    CHECK(run_cli({"tableau", "--s", "1", "--k", "1", "--format", "xml"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"integrate", "--problem", "nosuch", "--s", "1", "--k", "1",
                   "--h", "0.1", "--steps", "2"}).code == 2);
    CHECK(run_cli({"integrate", "--problem", "harmonic", "--s", "1", "--k", "1",
                   "--h", "0.1", "--steps", "2", "--y0", "1,2,3"}).code == 2);
    CHECK(run_cli({"convergence", "--problem", "harmonic", "--s", "1", "--k", "1",
                   "--levels", "1"}).code == 2);
}

TEST_CASE("integrate: harmonic run writes exact, reproducible outputs")
{
    const ScratchDir dir("integrate_harmonic");
    const std::vector<std::string> args{"integrate", "--problem", "harmonic",
                                        "--s", "1", "--k", "1",
                                        "--h", "0.1", "--steps", "100",
                                        "--out", dir.str()};
    const CliResult r = run_cli(args);
    REQUIRE(r.code == 0);

    // Trajectory round-trips through "%.17g" text bit-exactly.
    const std::string traj_text = slurp(dir.path / "trajectory.csv");
    std::istringstream traj_in(traj_text);
    const hbvm::Trajectory traj = hbvm::read_trajectory_csv(traj_in);
    REQUIRE(traj.states.size() == 101);

    const auto expected = hbvm::integrate(hbvm::harmonic_oscillator_system(),
                                          {1.0, 0.0}, 0.1, 100,
                                          hbvm::build_tableau(1, 1));
    for (std::size_t n = 0; n < expected.states.size(); ++n) {
        CHECK(traj.states[n][0] == expected.states[n][0]);
        CHECK(traj.states[n][1] == expected.states[n][1]);
    }

    // Energy drift column stays at rounding level for the midpoint rule.
    const auto drift_lines = split_lines(slurp(dir.path / "drift.csv"));
    REQUIRE(drift_lines.size() == 102);
    const auto header = split_fields(drift_lines[0]);
    REQUIRE(header.size() >= 2);
    CHECK(header[0] == "t");
    CHECK(header[1] == "hamiltonian_rel_err");
    double max_drift = 0.0;
    for (std::size_t i = 1; i < drift_lines.size(); ++i) {
        const auto fields = split_fields(drift_lines[i]);
        REQUIRE(fields.size() == header.size());
        max_drift = std::max(max_drift, std::abs(std::stod(fields[1])));
    }
    CHECK(max_drift <= 1e-13);

    const json manifest = slurp_json(dir.path / "manifest.json");
    CHECK(manifest["status"] == "ok");
    CHECK(manifest["steps_completed"] == 100);
    CHECK(manifest["problem"] == "harmonic");
    CHECK(manifest.contains("determinism"));

    // Re-running with identical flags reproduces the bytes.
    const ScratchDir dir2("integrate_harmonic_again");
    auto args2 = args;
    args2.back() = dir2.str();
    REQUIRE(run_cli(args2).code == 0);
    CHECK(slurp(dir2.path / "trajectory.csv") == traj_text);
    CHECK(slurp(dir2.path / "drift.csv") == slurp(dir.path / "drift.csv"));
}

TEST_CASE("integrate: stage divergence reports exit 3 and a partial trajectory")
{
    const ScratchDir dir("integrate_diverge");
    const CliResult r = run_cli({"integrate", "--problem", "quintic",
                                 "--s", "2", "--k", "5",
                                 "--h", "1.0", "--steps", "50",
                                 "--y0", "0,2.0", "--out", dir.str()});
    CHECK(r.code == 3);
    CHECK(!r.err.empty());

    const json manifest = slurp_json(dir.path / "manifest.json");
    CHECK(manifest["status"] == "nonconvergence");
    REQUIRE(manifest.contains("failing_step"));
    const long failing = manifest["failing_step"].get<long>();
    CHECK(failing >= 0);
    CHECK(manifest["steps_completed"].get<long>() == failing);

    std::istringstream traj_in(slurp(dir.path / "trajectory.csv"));
    const hbvm::Trajectory traj = hbvm::read_trajectory_csv(traj_in);
    CHECK(static_cast<long>(traj.states.size()) == failing + 1);
}

TEST_CASE("integrate: collision during evaluation exits 4")
{
    const ScratchDir dir("integrate_collide");
    // Bodies 1 and 2 share a position; momenta are irrelevant.
    const CliResult r = run_cli({"integrate", "--problem", "sitnikov",
                                 "--s", "1", "--k", "1",
                                 "--h", "0.1", "--steps", "5",
                                 "--y0", "1,0,0,1,0,0,0,0,1,0,0,0,0,0,0,0,0,0",
                                 "--out", dir.str()});
    CHECK(r.code == 4);
    const json manifest = slurp_json(dir.path / "manifest.json");
    CHECK(manifest["status"] == "evaluation_failure");
    CHECK(manifest["failing_step"] == 0);
}

TEST_CASE("convergence: harmonic midpoint study shows second order")
{
    const CliResult r = run_cli({"convergence", "--problem", "harmonic",
                                 "--s", "1", "--k", "1", "--h0", "0.25",
                                 "--levels", "3"});
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "h,error,observed_order");
    const auto first = split_fields(lines[1]);
    REQUIRE(first.size() == 3);
    CHECK(first[0] == "0.25");
    CHECK(first[2].empty());
    for (int row : {2, 3}) {
        const auto fields = split_fields(lines[row]);
        REQUIRE(fields.size() == 3);
        const double order = std::stod(fields[2]);
        CAPTURE(row);
        CHECK(std::abs(order - 2.0) <= 0.3);
    }
}

TEST_CASE("annulus: fast search writes consistent, reproducible artifacts")
{
    const ScratchDir dir("annulus_fast");
    const std::vector<std::string> args{"annulus", "--s", "2", "--k", "5",
                                        "--steps", "300", "--tol", "1e-3",
                                        "--out", dir.str()};
    const CliResult r = run_cli(args);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("probes = ") != std::string::npos);

    const json result = slurp_json(dir.path / "result.json");
    const double c_low = result["c_low"].get<double>();
    const double c_high = result["c_high"].get<double>();
    CHECK(c_high - c_low <= 1e-3);
    CHECK(c_low < c_high);
    REQUIRE(result["y0"].size() == 2);
    CHECK(result["y0"][1].get<double>() == c_low);
    CHECK(result["hstar"].get<double>() == hbvm::hstar_reference());
    CHECK(result["h_rel_err"].get<double>() >= 0.0);

    const auto probe_lines = split_lines(slurp(dir.path / "probes.csv"));
    CHECK(probe_lines[0] == "c,escaped,steps_run,escape_index,nonconvergence");
    CHECK(static_cast<int>(probe_lines.size()) - 1 == result["probes"].get<int>());

    const json manifest = slurp_json(dir.path / "manifest.json");
    CHECK(manifest["status"] == "ok");

    const ScratchDir dir2("annulus_fast_again");
    auto args2 = args;
    args2.back() = dir2.str();
    REQUIRE(run_cli(args2).code == 0);
    CHECK(slurp(dir2.path / "probes.csv") == slurp(dir.path / "probes.csv"));
    CHECK(slurp(dir2.path / "result.json") == slurp(dir.path / "result.json"));
}

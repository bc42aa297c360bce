#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spirits/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

const std::string cli = SPIRITS_CLI_PATH;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("spirits_cli_test_" + std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int run(const std::string& args) {
    const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string capture(const std::string& args) {
    TempDir dir;
    const fs::path out = dir.path / "stdout.txt";
    const std::string cmd = cli + " " + args + " > " + out.string() + " 2>/dev/null";
    if (std::system(cmd.c_str()) == -1) return {};
    std::ifstream in(out);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

} // namespace

TEST_CASE("cli: defaults dump is parseable as a config file") {
    const std::string dump = capture("defaults");
    CHECK(dump.find("[map]") != std::string::npos);
    CHECK(dump.find("theta") != std::string::npos);

    TempDir dir;
    const fs::path cfg = dir.path / "defaults.cfg";
    std::ofstream(cfg) << dump;
    CHECK(run("micro --config " + cfg.string() + " --out " + dir.path.string()) == 0);
}

TEST_CASE("cli: micro solves the reference equilibrium") {
    TempDir dir;
    REQUIRE(run("micro --micro.f=0.444444444444444444 --out " + dir.path.string()) == 0);
    const auto j = nlohmann::json::parse(read_file(dir.path / "micro.json"));
    CHECK(std::abs(j.at("c").get<double>() - 1.0) < 1e-10);
    CHECK(fs::exists(dir.path / "manifest.json"));
}

TEST_CASE("cli: manifest records content hashes of the artifacts") {
    TempDir dir;
    REQUIRE(run("fixed-points --out " + dir.path.string()) == 0);
    const std::string manifest = read_file(dir.path / "manifest.json");
    const std::string artifact = read_file(dir.path / "fixed_points.json");
    CHECK(manifest.find(spirits::fnv1a64_hex(artifact)) != std::string::npos);
    CHECK(manifest.find("\"command\": \"fixed-points\"") != std::string::npos);
}

TEST_CASE("cli: simulate writes trajectory, histogram and stats") {
    TempDir dir;
    REQUIRE(run("simulate --sim.steps=2000 --sim.burn_in=200 --out " + dir.path.string()) == 0);
    const std::string traj = read_file(dir.path / "traj.csv");
    CHECK(count_lines(traj) == 2001); // header + one row per step
    CHECK(traj.rfind("t,x,c,basin\n", 0) == 0);
    const std::string hist = read_file(dir.path / "hist.csv");
    CHECK(hist.rfind("bin_left,bin_right,density\n", 0) == 0);
    CHECK(count_lines(hist) == 201);
    CHECK(fs::exists(dir.path / "stats.json"));
}

TEST_CASE("cli: phase-diagram emits the expected header and row count") {
    TempDir dir;
    REQUIRE(run("phase-diagram --grid.n_c0=8 --grid.n_theta=5 --out " + dir.path.string()) == 0);
    const std::string phase = read_file(dir.path / "phase.csv");
    CHECK(phase.rfind("c0,theta,phase,distance_ratio\n", 0) == 0);
    CHECK(count_lines(phase) == 41);
}

TEST_CASE("cli: rates produces per-direction estimates and fits") {
    TempDir dir;
    const int rc = run(
        "rates --map.theta=10 --map.c_0=0.8 --rates.t_min=100 --rates.t_max=20000 "
        "--rates.n_min_transitions=30 --rates.max_steps_per_sigma=40000000 "
        "--seed 4242 --out " + dir.path.string());
    CHECK(rc == 0);
    const std::string rates = read_file(dir.path / "rates.csv");
    CHECK(rates.rfind("sigma,inv_sigma2,direction,mean_T,std_err_logT,n_transitions\n", 0) == 0);
    CHECK(count_lines(rates) == 13); // header + 6 sigmas x 2 directions
    const std::string fit = read_file(dir.path / "fit.json");
    CHECK(fit.find("\"w_fit\"") != std::string::npos);
    CHECK(fit.find("\"r_squared\"") != std::string::npos);
    CHECK(fit.find("\"w_kramers\"") != std::string::npos);
}

TEST_CASE("cli: exit code 2 on configuration errors") {
    TempDir dir;
    CHECK(run("simulate --shocks.sigma=-1 --out " + dir.path.string()) == 2);
    CHECK(run("simulate --map.unknown=1 --out " + dir.path.string()) == 2);
    CHECK(run("simulate --config /does/not/exist.cfg --out " + dir.path.string()) == 2);
}

TEST_CASE("cli: exit code 3 on domain errors") {
    TempDir dir;
    // Phase A map has no low fixed point to start from.
    CHECK(run("simulate --map.c_0=0.1 --sim.initial_c=fixed-point-low --out " +
              dir.path.string()) == 3);
    // Kramers analysis needs the bistable phase.
    CHECK(run("kramers --map.c_0=0.1 --out " + dir.path.string()) == 3);
}

TEST_CASE("cli: exit code 4 when the transition budget is exhausted") {
    TempDir dir;
    const int rc = run(
        "rates --map.theta=10 --map.c_0=0.8 --rates.t_min=200 --rates.t_max=150000 "
        "--rates.n_min_transitions=500 --rates.max_steps_per_sigma=2000000 --out " +
        dir.path.string());
    CHECK(rc == 4);
    // Partial results are still written for inspection.
    CHECK(fs::exists(dir.path / "rates.csv"));
}

TEST_CASE("cli: seed flag changes the trajectory, fixed seed reproduces it") {
    TempDir a, b, c;
    REQUIRE(run("simulate --sim.steps=500 --sim.burn_in=0 --seed 1 --out " + a.path.string()) == 0);
    REQUIRE(run("simulate --sim.steps=500 --sim.burn_in=0 --seed 1 --out " + b.path.string()) == 0);
    REQUIRE(run("simulate --sim.steps=500 --sim.burn_in=0 --seed 2 --out " + c.path.string()) == 0);
    CHECK(read_file(a.path / "traj.csv") == read_file(b.path / "traj.csv"));
    CHECK(read_file(a.path / "traj.csv") != read_file(c.path / "traj.csv"));
}

TEST_CASE("cli: inflation on a quiet bistable trajectory") {
    TempDir dir;
    const int rc = run(
        "inflation --shocks.sigma=0.01 --sim.steps=500 --sim.burn_in=0 "
        "--policy.crisis_prob=0.001 --out " + dir.path.string());
    CHECK(rc == 0);
    const std::string csv = read_file(dir.path / "inflation.csv");
    CHECK(csv.rfind("t,pi,r\n", 0) == 0);
    CHECK(count_lines(csv) == 500);
    const std::string summary = read_file(dir.path / "inflation_summary.json");
    CHECK(summary.find("\"delta_pi_crisis\": -") != std::string::npos);
}

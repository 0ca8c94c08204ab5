// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <cmath>

#include "cli.hpp"
#include "curlcurl/config.hpp"
#include "curlcurl/io.hpp"

using namespace curlcurl;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path write_config(const fs::path& dir, const std::string& body) {
    fs::create_directories(dir);
    const fs::path p = dir / "run.toml";
    std::ofstream(p) << body;
    return p;
}

const std::string kSmallConfig = R"(# small solve for tests
[grid]
rmax = 6.0
zmax = 6.0
nr = 33
nz = 33

[nonlinearity]
kind = "power"
p = 3.0

[potential]
kind = "constant"
value = 1.0

[solver]
max_iters = 4000

[random]
seed = 7
)";

}  // namespace

TEST_CASE("config parsing: defaults, schema, and line anchors") {
    const RunConfig cfg = parse_config_text(kSmallConfig, "inline");
    CHECK(cfg.nr == 33);
    CHECK(cfg.p == 3.0);
    CHECK(cfg.potential_value == 1.0);
    CHECK(cfg.seed == 7);
    CHECK(cfg.solver.max_iters == 4000);
    CHECK(cfg.output_dir == "out");  // untouched default

    // unknown keys are rejected with their line number
    try {
        parse_config_text("[grid]\nrmax = 4.0\ntypo_key = 1\n", "inline");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("inline:3") != std::string::npos);
        CHECK(msg.find("typo_key") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_config_text("[grid]\nnz = 10\n", "x"), ConfigError);   // even nz
    CHECK_THROWS_AS(parse_config_text("[grid]\nnr = \"a\"\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[nonlinearity]\nkind = \"cubic\"\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[gamma]\nkind = \"csv\"\n", "x"), ConfigError);
}

TEST_CASE("solve subcommand writes artifacts and exits 0") {
    const fs::path dir = fs::temp_directory_path() / "curlcurl_cli_solve";
    fs::remove_all(dir);
    const fs::path cfg = write_config(dir, kSmallConfig);
    const int code = cli::run({"solve", "--config", cfg.string(), "--out", (dir / "o").string()});
    CHECK(code == 0);
    CHECK(fs::exists(dir / "o" / "field.csv"));
    CHECK(fs::exists(dir / "o" / "trace.csv"));
    const std::string summary = slurp(dir / "o" / "summary.txt");
    CHECK(summary.find("converged=1") != std::string::npos);
    CHECK(summary.find("symmetric=1") != std::string::npos);

    SUBCASE("reruns are bit-identical") {
        const int code2 =
            cli::run({"solve", "--config", cfg.string(), "--out", (dir / "o2").string()});
        CHECK(code2 == 0);
        CHECK(slurp(dir / "o" / "trace.csv") == slurp(dir / "o2" / "trace.csv"));
        CHECK(slurp(dir / "o" / "field.csv") == slurp(dir / "o2" / "field.csv"));
    }

    SUBCASE("symmetrize and reconstruct consume the solve output") {
        const fs::path star = dir / "star.csv";
        CHECK(cli::run({"symmetrize", "--in", (dir / "o" / "field.csv").string(), "--out",
                        star.string()}) == 0);
        CHECK(fs::exists(star));
        CHECK(cli::run({"reconstruct", "--in", (dir / "o" / "field.csv").string(), "--L", "4",
                        "--n", "17", "--out", (dir / "r").string()}) == 0);
        CHECK(fs::exists(dir / "r" / "field3d.vtk"));
        CHECK(fs::exists(dir / "r" / "slice.csv"));
    }
    fs::remove_all(dir);
}

TEST_CASE("missing and malformed configs exit 64") {
    CHECK(cli::run({"solve", "--config", "/nonexistent/run.toml"}) == cli::kExitUsage);
    const fs::path dir = fs::temp_directory_path() / "curlcurl_cli_bad";
    const fs::path cfg = write_config(dir, "[grid]\nnonsense = true\n");
    CHECK(cli::run({"solve", "--config", cfg.string()}) == cli::kExitUsage);
    CHECK(cli::run({"frobnicate"}) == cli::kExitUsage);
    fs::remove_all(dir);
}

TEST_CASE("indefinite potential refuses with exit 65 before solving") {
    const fs::path dir = fs::temp_directory_path() / "curlcurl_cli_well";
    fs::remove_all(dir);
    fs::create_directories(dir);
    auto g = make_grid(12.0, 12.0, 49, 49);
    CylField well(g);
    well.fill([](double r, double z) { return (r * r + z * z < 16.0) ? -10.0 : 1.0; });
    write_field_csv(well, (dir / "well.csv").string());
    const fs::path cfg = write_config(dir, R"([grid]
rmax = 12.0
zmax = 12.0
nr = 49
nz = 49

[potential]
kind = "csv"
path = ")" + (dir / "well.csv").string() + R"("

[output]
dir = ")" + (dir / "o").string() + R"("
)");
    CHECK(cli::run({"solve", "--config", cfg.string()}) == cli::kExitHypothesis);
    CHECK_FALSE(fs::exists(dir / "o" / "field.csv"));
    fs::remove_all(dir);
}

TEST_CASE("verify suites run from config and exit 0 on the bundled corpus") {
    const fs::path dir = fs::temp_directory_path() / "curlcurl_cli_verify";
    fs::remove_all(dir);
    const fs::path cfg = write_config(dir, R"([grid]
rmax = 8.0
zmax = 8.0
nr = 49
nz = 49

[output]
dir = ")" + (dir / "o").string() + R"("

[random]
seed = 99
)");
    CHECK(cli::run({"verify", "--config", cfg.string(), "--suite", "hardy"}) == 0);
    CHECK(fs::exists(dir / "o" / "report.csv"));
    const std::string report = slurp(dir / "o" / "report.csv");
    CHECK(report.rfind("id,lhs,rhs,constant,pass,slack", 0) == 0);
    CHECK(cli::run({"verify", "--config", cfg.string(), "--suite", "rearrange"}) == 0);
    CHECK(cli::run({"verify", "--config", cfg.string(), "--suite", "coercivity"}) == 0);
    CHECK(cli::run({"verify", "--config", cfg.string(), "--suite", "nosuch"}) ==
          cli::kExitUsage);
    fs::remove_all(dir);
}

TEST_CASE("non-convergence exits 2; csv gamma and csv init are honored") {
    const fs::path dir = fs::temp_directory_path() / "curlcurl_cli_more";
    fs::remove_all(dir);
    fs::create_directories(dir);

    auto g = make_grid(6.0, 6.0, 33, 33);
    CylField gam(g);
    gam.fill([](double, double z) { return 1.0 + std::exp(-z * z); });
    write_field_csv(gam, (dir / "gamma.csv").string());

    const std::string base = R"([grid]
rmax = 6.0
zmax = 6.0
nr = 33
nz = 33

[gamma]
kind = "csv"
path = ")" + (dir / "gamma.csv").string() + R"("
)";
    const fs::path starved = write_config(dir, base + "\n[solver]\nmax_iters = 3\n");
    CHECK(cli::run({"solve", "--config", starved.string(), "--out", (dir / "s").string()}) ==
          cli::kExitNotConverged);

    const fs::path full = dir / "full.toml";
    std::ofstream(full) << base << "\n[solver]\nmax_iters = 6000\n";
    CHECK(cli::run({"solve", "--config", full.string(), "--out", (dir / "f").string()}) == 0);

    // restart from the converged field through the csv init path
    const fs::path warm = dir / "warm.toml";
    std::ofstream(warm) << base << "\n[solver]\ninit = \"csv\"\ninit_path = \""
                        << (dir / "f" / "field.csv").string() << "\"\n";
    CHECK(cli::run({"solve", "--config", warm.string(), "--out", (dir / "w").string()}) == 0);
    fs::remove_all(dir);
}

TEST_CASE("spectrum subcommand reports lambda_min") {
    const fs::path dir = fs::temp_directory_path() / "curlcurl_cli_spec";
    fs::remove_all(dir);
    const fs::path cfg = write_config(dir, kSmallConfig);
    CHECK(cli::run({"spectrum", "--config", cfg.string()}) == 0);
    fs::remove_all(dir);
}

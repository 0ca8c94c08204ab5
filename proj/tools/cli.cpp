// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "curlcurl/analysis.hpp"
#include "curlcurl/config.hpp"
#include "curlcurl/io.hpp"
#include "curlcurl/nehari.hpp"
#include "curlcurl/random_fields.hpp"
#include "curlcurl/reconstruct3d.hpp"
#include "curlcurl/symmetry.hpp"

namespace fs = std::filesystem;

namespace curlcurl::cli {

namespace {

struct VerifyRow {
    std::string id;
    double lhs, rhs, constant;
    bool pass;
    double slack;
};

void emit_rows(const std::vector<VerifyRow>& rows, const std::string& outdir) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!outdir.empty()) {
        fs::create_directories(outdir);
        file.open(fs::path(outdir) / "report.csv");
        if (file) os = &file;
    }
    *os << "id,lhs,rhs,constant,pass,slack\n";
    for (const auto& r : rows)
        *os << r.id << ',' << format_g17(r.lhs) << ',' << format_g17(r.rhs) << ','
            << format_g17(r.constant) << ',' << (r.pass ? 1 : 0) << ',' << format_g17(r.slack)
            << '\n';
    if (os != &std::cout) {
        int fails = 0;
        for (const auto& r : rows)
            if (!r.pass) ++fails;
        std::cout << "checks=" << rows.size() << " failures=" << fails << " report="
                  << (fs::path(outdir) / "report.csv").string() << "\n";
    }
}

VerifyRow row_from(const InequalityReport& r) {
    return {r.id, r.lhs, r.rhs, r.constant, r.pass, r.slack};
}

int cmd_solve(const RunConfig& cfg, const std::string& out_override) {
    const std::string outdir = out_override.empty() ? cfg.output_dir : out_override;
    GridPtr grid = build_grid(cfg);
    const Nonlinearity f = build_nonlinearity(cfg, grid);
    const Potential V = build_potential(cfg, grid);

    const auto validation = validate_nonlinearity(f, *grid, default_s_ladder());
    if (!validation.all()) {
        std::cerr << "hypothesis failure: nonlinearity violates assumptions ("
                  << validation.detail << ")\n";
        return kExitHypothesis;
    }
    if (!is_reversed_steiner(V, *grid, 1e-10)) {
        std::cerr << "hypothesis failure: potential is not reversed Steiner-symmetric\n";
        return kExitHypothesis;
    }
    const CoercivityReport coer = coercivity_lambda_min(grid, V);
    if (!(coer.lambda_min > 0.0)) {
        std::cerr << "hypothesis failure: lambda_min = " << coer.lambda_min
                  << " <= 0, the potential term does not define an equivalent norm "
                     "on this grid; refusing to solve\n";
        return kExitHypothesis;
    }

    std::optional<CylField> init;
    if (cfg.init == "csv") {
        CylField f0 = read_field_csv(cfg.init_path);
        if (!f0.grid().same_layout(*grid)) {
            std::cerr << "config error: solver.init_path grid does not match [grid]\n";
            return kExitUsage;
        }
        init = CylField(grid, std::vector<double>(f0.values().begin(), f0.values().end()));
    }

    const SolveReport rep = solve_ground_state(grid, V, f, cfg.solver, std::move(init));

    fs::create_directories(outdir);
    write_field_csv(rep.u, (fs::path(outdir) / "field.csv").string());
    write_trace_csv(rep.trace, (fs::path(outdir) / "trace.csv").string());

    std::ostringstream summary;
    summary << "converged=" << (rep.converged ? 1 : 0) << "\n"
            << "iterations=" << rep.iterations << "\n"
            << "J=" << format_g17(rep.J) << "\n"
            << "nehari_residual=" << format_g17(rep.nehari_res) << "\n"
            << "symmetric=" << (rep.symmetric ? 1 : 0) << "\n"
            << "positive=" << (rep.positive ? 1 : 0) << "\n"
            << "lambda_min=" << format_g17(coer.lambda_min) << "\n"
            << "grid=" << cfg.nr << "x" << cfg.nz << " rmax=" << cfg.rmax
            << " zmax=" << cfg.zmax << "\n"
            << "nonlinearity=" << cfg.nonlinearity_kind << " p=" << cfg.p << "\n";
    if (!rep.error.empty()) summary << "error=" << rep.error << "\n";
    std::ofstream(fs::path(outdir) / "summary.txt") << summary.str();
    std::cout << summary.str();

    return rep.converged ? 0 : kExitNotConverged;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    GridPtr grid = build_grid(cfg);
    const Nonlinearity f = build_nonlinearity(cfg, grid);
    const Potential V = build_potential(cfg, grid);
    std::vector<VerifyRow> rows;

    if (suite == "hardy" || suite == "all") {
        std::mt19937_64 rng(cfg.seed);
        for (int k = 0; k < 1000; ++k) {
            auto rep = check_hardy(random_bump_field(grid, rng));
            rep.id = "hardy_" + std::to_string(k);
            rows.push_back(row_from(rep));
        }
        auto fine = make_grid(10.0, 10.0, 1025, 1025);
        auto rep = check_hardy(gaussian_field(fine));
        rep.id = "hardy_gaussian";
        rep.pass = rep.pass && std::fabs(rep.lhs - 0.886227) < 1e-4 &&
                   std::fabs(rep.rhs - 2.215567) < 1e-4;
        rows.push_back(row_from(rep));
    }
    if (suite == "embedding" || suite == "all") {
        std::mt19937_64 rng(cfg.seed + 1);
        for (int k = 0; k < 100; ++k) {
            CylField u = random_bump_field(grid, rng);
            for (double q : {2.0, 4.0, 6.0}) {
                auto rep = check_embedding(u, q);
                rep.id = "embedding_q" + std::to_string(int(q)) + "_" + std::to_string(k);
                rows.push_back(row_from(rep));
            }
        }
    }
    if (suite == "decay" || suite == "all") {
        double c[2];
        int k = 0;
        for (int n : {97, 193}) {
            auto g = make_grid(8.0, 8.0, n, n);
            const DecayReport rep = decay_constant(gaussian_field(g), k);
            c[k] = rep.constant;
            rows.push_back({"decay_gaussian_l" + std::to_string(k), rep.constant, 0.0, 0.0,
                            rep.preconditions_ok, 0.0});
            ++k;
        }
        rows.push_back({"decay_gaussian_stability", std::fabs(c[0] - c[1]), 0.05 * c[1], 1.0,
                        std::fabs(c[0] - c[1]) <= 0.05 * c[1], std::fabs(c[0] - c[1]) - 0.05 * c[1]});
        std::mt19937_64 rng(cfg.seed + 2);
        for (int t = 0; t < 20; ++t) {
            CylField u = steiner_symmetrize(random_bump_field(grid, rng, {.nonnegative = true}));
            const DecayReport rep = decay_constant(u);
            rows.push_back({"decay_corpus_" + std::to_string(t), rep.constant, 0.0, 0.0,
                            rep.preconditions_ok && std::isfinite(rep.constant), 0.0});
        }
    }
    if (suite == "rearrange" || suite == "all") {
        std::mt19937_64 rng(cfg.seed + 3);
        for (int k = 0; k < 100; ++k) {
            CylField u = random_bump_field(grid, rng, {.nonnegative = true});
            const SymmetryReport rep = check_rearrangement(u, V, f);
            const bool ok = rep.preconditions_ok && rep.violations.empty();
            rows.push_back({"rearrange_norm_" + std::to_string(k), rep.norm_after,
                            rep.norm_before, 1.0, ok, rep.norm_after - rep.norm_before});
            rows.push_back({"rearrange_I_" + std::to_string(k), rep.I_before, rep.I_after, 1.0,
                            ok, rep.I_before - rep.I_after});
            rows.push_back({"rearrange_Iprime_" + std::to_string(k), rep.Iprime_before,
                            rep.Iprime_after, 1.0, ok, rep.Iprime_before - rep.Iprime_after});
        }
        std::mt19937_64 rng2(cfg.seed + 4);
        for (int k = 0; k < 50; ++k) {
            CylField a = random_bump_field(grid, rng2, {.nonnegative = true});
            CylField b = random_bump_field(grid, rng2, {.nonnegative = true});
            auto rep = check_nonexpansivity(a, b);
            rep.id = "nonexpansivity_" + std::to_string(k);
            rows.push_back(row_from(rep));
        }
    }
    if (suite == "coercivity" || suite == "all") {
        const CoercivityReport rep = coercivity_lambda_min(grid, V);
        rows.push_back({"coercivity_lambda_min", rep.lambda_min, 0.0, 1.0,
                        rep.converged && rep.lambda_min > 0.0, -rep.lambda_min});
    }

    emit_rows(rows, cfg.output_dir);
    for (const auto& r : rows)
        if (!r.pass) return kExitVerifyFailed;
    return 0;
}

int cmd_symmetrize(const std::string& in, const std::string& out, const RunConfig& cfg) {
    CylField u = read_field_csv(in);
    if (min_value(u) < 0.0) {
        std::cerr << "symmetrize: input field has negative values; take the nonnegative part "
                     "first\n";
        return kExitUsage;
    }
    GridPtr grid = u.grid_ptr();
    RunConfig local = cfg;
    local.rmax = grid->rmax;
    local.zmax = grid->zmax;
    local.nr = grid->nr;
    local.nz = grid->nz;
    const Nonlinearity f = build_nonlinearity(local, grid);
    const Potential V = build_potential(local, grid);

    CylField star = steiner_symmetrize(u);
    write_field_csv(star, out);

    const SymmetryReport rep = check_rearrangement(u, V, f);
    std::cout << "norm_before=" << format_g17(rep.norm_before) << "\n"
              << "norm_after=" << format_g17(rep.norm_after) << "\n"
              << "I_before=" << format_g17(rep.I_before) << "\n"
              << "I_after=" << format_g17(rep.I_after) << "\n"
              << "Iprime_before=" << format_g17(rep.Iprime_before) << "\n"
              << "Iprime_after=" << format_g17(rep.Iprime_after) << "\n"
              << "preconditions_ok=" << (rep.preconditions_ok ? 1 : 0) << "\n"
              << "violations=" << rep.violations.size() << "\n";
    for (const auto& [id, slack] : rep.violations)
        std::cout << "violation." << id << "=" << format_g17(slack) << "\n";
    return rep.pass() ? 0 : kExitVerifyFailed;
}

int cmd_reconstruct(const std::string& in, double L, int n, const std::string& outdir,
                    const RunConfig& cfg) {
    CylField u = read_field_csv(in);
    GridPtr grid = u.grid_ptr();
    RunConfig local = cfg;
    local.rmax = grid->rmax;
    local.zmax = grid->zmax;
    local.nr = grid->nr;
    local.nz = grid->nz;
    const Nonlinearity f = build_nonlinearity(local, grid);
    const Potential V = build_potential(local, grid);

    const VectorField3D U = reconstruct(u, L, n);
    const ScalarField3D div = divergence(U);
    const ScalarField3D res = curl_curl_residual(U, V, f);
    fs::create_directories(outdir);
    write_vtk(U, res, (fs::path(outdir) / "field3d.vtk").string());
    write_slice_csv(U, (fs::path(outdir) / "slice.csv").string());
    std::cout << "n=" << n << " L=" << format_g17(L) << "\n"
              << "max_div=" << format_g17(max_abs3d(div)) << "\n"
              << "max_residual=" << format_g17(max_abs3d(res)) << "\n"
              << "vtk=" << (fs::path(outdir) / "field3d.vtk").string() << "\n";
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    GridPtr grid = build_grid(cfg);
    const Potential V = build_potential(cfg, grid);
    const CoercivityReport rep = coercivity_lambda_min(grid, V);
    std::cout << "lambda_min=" << format_g17(rep.lambda_min) << "\n"
              << "iterations=" << rep.iterations << "\n"
              << "converged=" << (rep.converged ? 1 : 0) << "\n"
              << "equivalent_norm=" << (rep.lambda_min > 0.0 ? 1 : 0) << "\n";
    return rep.converged ? 0 : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Nehari-manifold ground states of the cylindrically reduced "
                 "nonlinear curl-curl equation"};
    app.require_subcommand(1);
    app.footer(
        "Config file defaults:\n"
        "  [grid] rmax=12 zmax=12 nr=129 nz=129 (nz odd, z=0 on the grid)\n"
        "  [nonlinearity] kind=power p=3   [gamma] kind=constant value=1\n"
        "  [potential] kind=constant value=1\n"
        "  [solver] init=gaussian max_iters=20000 tol_nehari=1e-9 tol_j=1e-10\n"
        "           symmetrize_every=1 step_init=0 (auto) step_shrink=0.5\n"
        "           armijo_c=1e-4 max_backtracks=40\n"
        "  [output] dir=out   [random] seed=12345\n"
        "The full key reference lives in README.md. CURLCURL_THREADS caps the\n"
        "worker count for parallel maps; outputs are bit-identical regardless.");

    std::string config_path, out_override, suite = "all", in_path, out_path = "field_star.csv";
    double L = 4.0;
    int n3d = 33;

    auto* solve = app.add_subcommand("solve", "minimize J on the Nehari set and export the field");
    solve->add_option("--config", config_path, "run configuration file")->required();
    solve->add_option("--out", out_override, "output directory (overrides output.dir)");

    auto* verify = app.add_subcommand("verify", "run the inequality verification suites");
    verify->add_option("--config", config_path, "run configuration file")->required();
    verify->add_option("--suite", suite, "hardy|embedding|decay|rearrange|coercivity|all")
        ->check(CLI::IsMember({"hardy", "embedding", "decay", "rearrange", "coercivity", "all"}));

    auto* symm = app.add_subcommand("symmetrize", "Steiner-symmetrize a field CSV");
    symm->add_option("--in", in_path, "input field CSV")->required();
    symm->add_option("--out", out_path, "output field CSV")->required();
    symm->add_option("--config", config_path, "optional config for V and f context");

    auto* recon = app.add_subcommand("reconstruct", "lift a field CSV to the 3D vector field");
    recon->add_option("--in", in_path, "input field CSV")->required();
    recon->add_option("--L", L, "3D half-extent (<= min(rmax, zmax))");
    recon->add_option("--n", n3d, "3D nodes per axis");
    recon->add_option("--out", out_override, "output directory")->required();
    recon->add_option("--config", config_path, "optional config for V and f context");

    auto* spect = app.add_subcommand("spectrum", "smallest Rayleigh quotient of the V-form");
    spect->add_option("--config", config_path, "run configuration file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = parse_config_file(config_path);
        if (solve->parsed()) return cmd_solve(cfg, out_override);
        if (verify->parsed()) return cmd_verify(cfg, suite);
        if (symm->parsed()) return cmd_symmetrize(in_path, out_path, cfg);
        if (recon->parsed()) return cmd_reconstruct(in_path, L, n3d, out_override, cfg);
        if (spect->parsed()) return cmd_spectrum(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace curlcurl::cli

// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "curlcurl/analysis.hpp"
#include "curlcurl/nehari.hpp"
#include "curlcurl/random_fields.hpp"
#include "curlcurl/reconstruct3d.hpp"

using namespace curlcurl;

namespace {

// Independent 1-d oracle: maximize J(s u) over s > 0 by a coarse log sweep
// followed by golden-section refinement, all through full energy evaluations.
double max_energy_along_ray(const CylField& u, const Potential& V, const Nonlinearity& f,
                            double s_lo, double s_hi) {
    double best_s = s_lo, best_J = -1e300;
    for (int k = 0; k <= 200; ++k) {
        const double s = s_lo * std::pow(s_hi / s_lo, k / 200.0);
        const double J = energy(s * u, V, f);
        if (J > best_J) {
            best_J = J;
            best_s = s;
        }
    }
    double a = best_s / 1.1, b = best_s * 1.1;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double Jc = energy(c * u, V, f), Jd = energy(d * u, V, f);
    while (b - a > 1e-9 * b) {
        if (Jc > Jd) {
            b = d;
            d = c;
            Jd = Jc;
            c = b - gr * (b - a);
            Jc = energy(c * u, V, f);
        } else {
            a = c;
            c = d;
            Jc = Jd;
            d = a + gr * (b - a);
            Jd = energy(d * u, V, f);
        }
    }
    return std::max(Jc, Jd);
}

}  // namespace

TEST_CASE("fields already on the Nehari set have scale one") {
    auto g = make_grid(8.0, 8.0, 65, 65);
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    std::mt19937_64 rng(3);
    CylField u = random_bump_field(g, rng);
    CylField m = nehari_project(u, V, f);
    CHECK(nehari_residual(m, V, f) <= 1e-10);
    CHECK(std::fabs(nehari_scale(m, V, f) - 1.0) <= 1e-10);
}

TEST_CASE("Gaussian scale matches the closed-form Gaussian moments") {
    auto g = make_grid(10.0, 10.0, 513, 513);
    const double t = nehari_scale(gaussian_field(g), Potential::constant(1.0),
                                  Nonlinearity::power(3.0));
    // t = sqrt(||u||^2 / int r^2 u^4 r^3) = sqrt(3.101794 / 0.156665)
    CHECK(std::fabs(t - 4.4496) <= 1e-3);
}

TEST_CASE("scale homogeneity for the power kind") {
    auto g = make_grid(8.0, 8.0, 65, 65);
    const Potential V = Potential::constant(1.0);
    std::mt19937_64 rng(7);
    CylField u = random_bump_field(g, rng);
    for (double p : {2.0, 3.0, 4.0}) {
        const Nonlinearity f = Nonlinearity::power(p);
        const double t1 = nehari_scale(u, V, f);
        const double t2 = nehari_scale(3.0 * u, V, f);
        CHECK(t2 == doctest::Approx(t1 / 3.0).epsilon(1e-9));
        // projection is ray-invariant
        CylField m1 = nehari_project(u, V, f);
        CylField m2 = nehari_project(3.0 * u, V, f);
        for (size_t k = 0; k < m1.values().size(); ++k)
            CHECK(std::fabs(m1.values()[k] - m2.values()[k]) <=
                  1e-9 * (1.0 + std::fabs(m1.values()[k])));
    }
}

TEST_CASE("bisection scale agrees with the closed form for pure powers") {
    auto g = make_grid(8.0, 8.0, 97, 97);
    const Potential V = Potential::constant(1.0);
    std::mt19937_64 rng(11);
    for (double p : {2.0, 3.0, 4.0}) {
        const Nonlinearity f = Nonlinearity::power(p);
        for (int trial = 0; trial < 5; ++trial) {
            CylField u = random_bump_field(g, rng);
            const double t_bis = nehari_scale(u, V, f);
            // t = (||u||^2 / int Gamma r^(p-1) |u|^(p+1) r^3)^(1/(p-1))
            CylField integrand(g);
            for (int i = 0; i < g->nr; ++i)
                for (int j = 0; j < g->nz; ++j)
                    integrand(i, j) = std::pow(g->r[i] * std::fabs(u(i, j)), p - 1.0) *
                                      u(i, j) * u(i, j);
            const double t_cf =
                std::pow(weighted_norm_sq(u, V) / integrate_r3(integrand), 1.0 / (p - 1.0));
            CHECK(std::fabs(t_bis - t_cf) <= 1e-10 * t_cf);
        }
    }
}

TEST_CASE("projection maximizes the energy along the ray") {
    auto g = make_grid(8.0, 8.0, 49, 49);
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    std::mt19937_64 rng(13);
    CylField u = random_bump_field(g, rng);
    const double t = nehari_scale(u, V, f);
    const double J_proj = energy(t * u, V, f);
    const double J_max = max_energy_along_ray(u, V, f, t / 8.0, 8.0 * t);
    CHECK(std::fabs(J_proj - J_max) <= 1e-8 * (1.0 + std::fabs(J_proj)));
}

TEST_CASE("nehari energy identity on the manifold") {
    auto g = make_grid(8.0, 8.0, 65, 65);
    const Potential V = Potential::constant(1.0);
    std::mt19937_64 rng(17);
    for (double p : {2.0, 3.0, 4.0}) {
        const Nonlinearity f = Nonlinearity::power(p);
        CylField m = nehari_project(random_bump_field(g, rng), V, f);
        const double J = energy(m, V, f);
        const double expect = (0.5 - 1.0 / (p + 1.0)) * weighted_norm_sq(m, V);
        CHECK(std::fabs(J - expect) <= 1e-8 * (1.0 + std::fabs(J)));
    }
}

TEST_CASE("step diagnostics: symmetric manifold fields are fixed points") {
    auto g = make_grid(8.0, 8.0, 49, 49);
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    CylField u = gaussian_field(g);
    apply_dirichlet(u);
    CylField m = nehari_project(u, V, f);
    const StepDiagnostics d = step_diagnostics(m, V, f);
    CHECK(d.pass());
    CHECK(std::fabs(d.t_star - 1.0) <= 1e-10);
    CHECK(std::fabs(d.slack_J) <= 1e-10 * (1.0 + std::fabs(d.J_before)));
}

TEST_CASE("step diagnostics: asymmetric fields strictly improve") {
    auto g = make_grid(8.0, 10.0, 49, 61);
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    CylField u(g);
    u.fill([](double r, double z) {
        const double shift = 2.0 * std::exp(-r * r / 16.0);
        return std::exp(-0.5 * (r * r + (z - shift) * (z - shift)));
    });
    apply_dirichlet(u);
    CylField m = nehari_project(u, V, f);
    const StepDiagnostics d = step_diagnostics(m, V, f);
    CHECK(d.pass());
    CHECK(d.t_star < 1.0);
    CHECK(d.J_after < d.J_before);
}

TEST_CASE("step diagnostics: randomized corpus has zero violations") {
    auto g = make_grid(8.0, 8.0, 49, 49);
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        CylField u = random_bump_field(g, rng, {.nonnegative = true});
        CylField m = nehari_project(u, V, f);
        const StepDiagnostics d = step_diagnostics(m, V, f, 1e-8);
        CHECK(d.pass());
    }
}

TEST_CASE("ground state solve on a small grid") {
    auto grid = make_grid(8.0, 8.0, 65, 65);
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    SolverConfig cfg;
    cfg.max_iters = 10000;
    const SolveReport rep = solve_ground_state(grid, V, f, cfg);
    REQUIRE(rep.error.empty());
    CHECK(rep.converged);
    CHECK(rep.nehari_res < 1e-8);
    CHECK(rep.symmetric);
    CHECK(rep.positive);
    CHECK(rep.u.all_finite());

    // accepted energies never increase beyond tol_J
    for (size_t k = 1; k < rep.trace.size(); ++k)
        CHECK(rep.trace[k].J <= rep.trace[k - 1].J + cfg.tol_J * (1.0 + std::fabs(rep.trace[k].J)));

    // I'(lambda u)[lambda u] / (lambda^2 ||u||^2) -> 0 along lambda -> 0
    const double nsq = weighted_norm_sq(rep.u, V);
    double prev = 1e300;
    for (double lam : {1e-2, 1e-3, 1e-4}) {
        const double val = nonlinear_pairing(lam * rep.u, f) / (lam * lam * nsq);
        CHECK(val < prev);
        prev = val;
    }
    CHECK(prev < 1e-4);

    SUBCASE("restarting from a deeply converged field terminates within the window") {
        SolverConfig deep = cfg;
        deep.tol_J = 1e-13;
        const SolveReport drep = solve_ground_state(grid, V, f, deep, rep.u);
        REQUIRE(drep.converged);
        SolverConfig cfg2 = cfg;
        cfg2.max_iters = 100;
        const SolveReport rep2 = solve_ground_state(grid, V, f, cfg2, drep.u);
        CHECK(rep2.converged);
        CHECK(rep2.iterations <= cfg2.stagnation_window);
        CHECK(std::fabs(rep2.J - drep.J) <= 100 * cfg.tol_J * (1.0 + std::fabs(drep.J)));
    }
}

TEST_CASE("converged fields: axis regularity, residual self-convergence, decay stability") {
    const Potential V = Potential::constant(1.0);
    const Nonlinearity f = Nonlinearity::power(3.0);
    SolverConfig cfg;
    cfg.max_iters = 20000;
    double axis[2], selfres[2], decay[2];
    int k = 0;
    auto fine = make_grid(8.0, 8.0, 257, 257);
    for (int n : {65, 129}) {
        auto g = make_grid(8.0, 8.0, n, n);
        const SolveReport rep = solve_ground_state(g, V, f, cfg);
        REQUIRE(rep.converged);

        // one-sided discrete du/dr at the axis vanishes with the grid
        double dmax = 0.0;
        for (int j = 0; j < g->nz; ++j)
            dmax = std::max(dmax, std::fabs((-3.0 * rep.u(0, j) + 4.0 * rep.u(1, j) -
                                             rep.u(2, j)) / (2.0 * g->dr)));
        axis[k] = dmax;
        CHECK(dmax <= 2.0 * g->dr * max_abs(rep.u));

        // residual of the C^2 interpolant, evaluated on a fixed fine grid
        const FieldInterpolant interp(rep.u);
        CylField uf(fine);
        for (int i = 0; i < fine->nr; ++i)
            for (int j = 0; j < fine->nz; ++j) uf(i, j) = interp(fine->r[i], fine->z[j]);
        const CylField res = pde_residual(uf, V, f);
        double rmax = 0.0;
        for (int i = 0; i < fine->nr - 1; ++i)
            for (int j = 1; j < fine->nz - 1; ++j)
                if (fine->r[i] >= 0.5) rmax = std::max(rmax, std::fabs(res(i, j)));
        selfres[k] = rmax;

        // decay product u r^(3/2) |z|^(1/2) stays bounded, constant stable
        const DecayReport drep = decay_constant(rep.u, k);
        REQUIRE(drep.preconditions_ok);
        CHECK(std::isfinite(drep.constant));
        decay[k] = drep.constant;
        ++k;
    }
    CHECK(axis[1] < axis[0]);
    CHECK(std::log2(selfres[0] / selfres[1]) >= 1.5);
    CHECK(std::fabs(decay[0] - decay[1]) <= 0.10 * decay[1]);
}

TEST_CASE("bounded nonlinearity surfaces as a bracket failure at iteration 0") {
    auto grid = make_grid(6.0, 6.0, 33, 33);
    // f = s/(1+s) is strictly increasing but bounded, so F(s)/s stays bounded.
    const Nonlinearity f = Nonlinearity::custom(
        [](double, double, double s) { return s / (1.0 + s); },
        [](double, double, double s) { return s - std::log1p(s); }, 3.0);
    const SolveReport rep = solve_ground_state(grid, Potential::constant(1.0), f, {});
    CHECK_FALSE(rep.converged);
    CHECK_FALSE(rep.error.empty());
    CHECK(rep.error.find("iteration 0") != std::string::npos);
}

TEST_CASE("logarithmic kind converges too") {
    auto grid = make_grid(8.0, 8.0, 49, 49);
    SolverConfig cfg;
    cfg.max_iters = 10000;
    const SolveReport rep =
        solve_ground_state(grid, Potential::constant(1.0), Nonlinearity::logarithmic(), cfg);
    REQUIRE(rep.error.empty());
    CHECK(rep.converged);
    CHECK(rep.symmetric);
    CHECK(rep.positive);
}

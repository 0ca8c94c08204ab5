// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/nehari.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace curlcurl {

namespace {

// I'(tu)[tu]/t^2 evaluated without materializing tu.
double pairing_over_t2(const CylField& u, const Nonlinearity& f, double t) {
    const Grid& g = u.grid();
    const double t2 = t * t;
    double total = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        const double r2 = g.r[i] * g.r[i];
        double row = 0.0;
        for (int j = 0; j < g.nz; ++j) {
            const double x = u(i, j);
            row += g.cz[j] * f.f_node(g, i, j, t2 * r2 * x * x) * x * x;
        }
        total += g.wr3[i] * row;
    }
    return total;
}

double scale_by_bisection(const CylField& u, const Potential& V, const Nonlinearity& f,
                          double hint) {
    const double Q = weighted_norm_sq(u, V);
    if (!(Q > 0.0)) throw std::invalid_argument("nehari_scale: u must be nonzero");

    auto g_of = [&](double t) { return Q - pairing_over_t2(u, f, t); };

    double lo = std::clamp(hint, 1e-8, 1e8);
    double glo = g_of(lo);
    double hi = lo, ghi = glo;
    if (glo > 0.0) {
        while (ghi > 0.0) {
            lo = hi;
            glo = ghi;
            hi *= 2.0;
            if (hi > 1e8)
                throw std::runtime_error(
                    "nehari_scale: no bracket below t=1e8; the nonlinear primitive has no "
                    "superlinear growth on this grid, so the ray never crosses the Nehari set");
            ghi = g_of(hi);
        }
    } else {
        while (glo <= 0.0) {
            hi = lo;
            ghi = glo;
            lo *= 0.5;
            if (lo < 1e-8)
                throw std::runtime_error("nehari_scale: no bracket above t=1e-8");
            glo = g_of(lo);
        }
    }
    // g decreases across the bracket: g(lo) > 0 >= g(hi). Bisection with a
    // secant acceleration step; the bracket shrink keeps the guarantee.
    for (int k = 0; k < 200 && (hi - lo) > 1e-12 * hi; ++k) {
        double mid = 0.5 * (lo + hi);
        if (ghi != glo) {
            const double sec = lo + glo * (hi - lo) / (glo - ghi);
            const double margin = 0.01 * (hi - lo);
            if (sec > lo + margin && sec < hi - margin) mid = sec;
        }
        const double gm = g_of(mid);
        if (gm > 0.0) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
            ghi = gm;
        }
    }
    return 0.5 * (lo + hi);
}

// Solver-internal projection scale. For the pure power kind the defining
// equation has the closed form t = (Q / P0)^(1/(p-1)) with
// P0 = I'(u)[u]; anything else goes through the bracketed solve.
double scale_fast(const CylField& u, const Potential& V, const Nonlinearity& f, double hint) {
    if (f.kind() == NonlinearityKind::Power) {
        const double Q = weighted_norm_sq(u, V);
        if (!(Q > 0.0)) throw std::invalid_argument("nehari_scale: u must be nonzero");
        const double P0 = nonlinear_pairing(u, f);
        if (!(P0 > 0.0)) throw std::runtime_error("nehari_scale: vanishing nonlinear pairing");
        return std::pow(Q / P0, 1.0 / (f.growth_exponent() - 1.0));
    }
    return scale_by_bisection(u, V, f, hint);
}

}  // namespace

double nehari_residual(const CylField& u, const Potential& V, const Nonlinearity& f) {
    const double Q = weighted_norm_sq(u, V);
    if (Q <= 0.0) return std::numeric_limits<double>::infinity();
    return std::fabs(Q - nonlinear_pairing(u, f)) / Q;
}

double nehari_scale(const CylField& u, const Potential& V, const Nonlinearity& f) {
    return scale_by_bisection(u, V, f, 1.0);
}

CylField nehari_project(const CylField& u, const Potential& V, const Nonlinearity& f) {
    return nehari_scale(u, V, f) * u;
}

StepDiagnostics step_diagnostics(const CylField& u, const Potential& V, const Nonlinearity& f,
                                 double tol) {
    StepDiagnostics d;
    const CylField star = steiner_symmetrize(u);
    d.t_star = scale_by_bisection(star, V, f, 1.0);
    d.J_before = energy(u, V, f);
    d.J_after = energy(d.t_star * star, V, f);
    d.slack_t = d.t_star - 1.0;
    d.slack_J = d.J_after - d.J_before;
    d.t_le_one = d.slack_t <= tol;
    d.J_nonincreasing = d.slack_J <= tol * (1.0 + std::fabs(d.J_before));
    return d;
}

namespace {

double gershgorin_step(const Grid& g, const Potential& V) {
    double diag_r = 0.0;
    for (int i = 0; i < g.nr - 1; ++i) {
        double acc = g.mu3[i];
        if (i > 0) acc += g.mu3[i - 1];
        diag_r = std::max(diag_r, acc / (g.wr3[i] * g.dr * g.dr));
    }
    double vmax = 0.0;
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) vmax = std::max(vmax, std::fabs(V.at_node(g, i, j)));
    const double bound = 2.0 * diag_r + 4.0 / (g.dz * g.dz) + vmax;
    return 1.0 / bound;
}

}  // namespace

SolveReport solve_ground_state(const GridPtr& grid, const Potential& V, const Nonlinearity& f,
                               const SolverConfig& cfg, std::optional<CylField> init) {
    SolveReport rep;
    CylField u = init ? std::move(*init) : gaussian_field(grid);
    apply_dirichlet(u);
    clip_negative(u);

    double t = 1.0;
    try {
        t = scale_fast(u, V, f, 1.0);
    } catch (const std::exception& e) {
        rep.error = std::string("projection failed at iteration 0: ") + e.what();
        rep.u = std::move(u);
        rep.trace.push_back({0, 0.0, std::numeric_limits<double>::infinity(), 0.0});
        return rep;
    }
    u = t * u;
    double J = energy(u, V, f);
    rep.trace.push_back({0, J, nehari_residual(u, V, f), t});

    const double alpha0 = cfg.step_init > 0.0 ? cfg.step_init : gershgorin_step(*grid, V);
    const double alpha_max = 64.0 * alpha0;
    double alpha = alpha0;
    int small_count = 0;

    int iter = 1;
    for (; iter <= cfg.max_iters; ++iter) {
        // Symmetrize and re-project; by the rearrangement chain this never
        // increases J beyond roundoff.
        if (cfg.symmetrize_every > 0 && iter % cfg.symmetrize_every == 0) {
            CylField star = steiner_symmetrize(u);
            const double ts = scale_fast(star, V, f, 1.0);
            CylField v = ts * star;
            const double Jv = energy(v, V, f);
            if (Jv <= J + cfg.tol_J * (1.0 + std::fabs(J))) {
                u = std::move(v);
                J = Jv;
                t = ts;
            }
        }

        CylField grad = energy_gradient(u, V, f);
        const double gnorm2 = inner_r3(grad, grad);

        double try_alpha = std::min(alpha * 1.5, alpha_max);
        bool accepted = false;
        double bestJ = std::numeric_limits<double>::infinity();
        CylField best;
        double best_t = t, best_alpha = alpha;
        for (int bt = 0; bt < cfg.max_backtracks; ++bt) {
            CylField cand = u;
            axpy(-try_alpha, grad, cand);
            clip_negative(cand);
            if (max_abs(cand) == 0.0) {
                try_alpha *= cfg.step_shrink;
                continue;
            }
            double tc;
            try {
                tc = scale_fast(cand, V, f, t);
            } catch (const std::exception&) {
                try_alpha *= cfg.step_shrink;
                continue;
            }
            CylField proj = tc * cand;
            const double Jc = energy(proj, V, f);
            if (Jc < bestJ) {
                bestJ = Jc;
                best = proj;
                best_t = tc;
                best_alpha = try_alpha;
            }
            if (Jc <= J - cfg.armijo_c * try_alpha * gnorm2) {
                accepted = true;
                break;
            }
            try_alpha *= cfg.step_shrink;
        }

        const double Jprev = J;
        if (accepted || bestJ <= J + cfg.tol_J * (1.0 + std::fabs(J))) {
            u = std::move(best);
            J = bestJ;
            t = best_t;
            alpha = best_alpha;
        }
        // else: keep u; the step stalled at this resolution.

        const double res = nehari_residual(u, V, f);
        rep.trace.push_back({iter, J, res, t});

        const double rel_change = std::fabs(J - Jprev) / (1.0 + std::fabs(J));
        if (res <= cfg.tol_nehari && rel_change <= cfg.tol_J)
            ++small_count;
        else
            small_count = 0;
        if (small_count >= cfg.stagnation_window) {
            rep.converged = true;
            break;
        }
    }

    // Final cleanup pass so the reported field carries the certified
    // structure exactly.
    clip_negative(u);
    CylField star = steiner_symmetrize(u);
    const double tf = scale_fast(star, V, f, 1.0);
    CylField v = tf * star;
    if (energy(v, V, f) <= J + cfg.tol_J * (1.0 + std::fabs(J))) u = std::move(v);

    rep.J = energy(u, V, f);
    rep.nehari_res = nehari_residual(u, V, f);
    rep.iterations = std::min(iter, cfg.max_iters);
    const CylField ustar = steiner_symmetrize(u);
    double dsym = 0.0;
    for (size_t k = 0; k < u.values().size(); ++k)
        dsym = std::max(dsym, std::fabs(u.values()[k] - ustar.values()[k]));
    rep.symmetric = dsym <= 1e-8;
    rep.positive = min_value(u) >= 0.0;
    rep.u = std::move(u);
    return rep;
}

}  // namespace curlcurl

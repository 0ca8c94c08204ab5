// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "curlcurl/symmetry.hpp"

namespace curlcurl {

InequalityReport check_hardy(const CylField& u) {
    InequalityReport rep;
    rep.id = "hardy";
    rep.constant = 1.0;
    CylField u2 = u;
    for (double& x : u2.values()) x *= x;
    rep.lhs = integrate_r1(u2);  // u^2/r^2 against r^3 is u^2 against r
    rep.rhs = dirichlet_energy(u);
    rep.slack = rep.lhs - rep.constant * rep.rhs;
    rep.pass = rep.slack <= 1e-12 * (1.0 + std::fabs(rep.lhs));
    return rep;
}

InequalityReport check_embedding(const CylField& u, double q) {
    if (!(q >= 2.0 && q <= 6.0))
        throw std::invalid_argument("check_embedding: q must lie in [2,6]");
    InequalityReport rep;
    rep.id = "embedding_q" + std::to_string(q);
    rep.constant = kEmbeddingConstant;
    const Grid& g = u.grid();
    CylField ruq(u.grid_ptr());
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) ruq(i, j) = std::pow(std::fabs(g.r[i] * u(i, j)), q);
    const double lq = std::pow(integrate_r1(ruq), 1.0 / q);
    CylField u2 = u;
    for (double& x : u2.values()) x *= x;
    const double h1 = std::sqrt(dirichlet_energy(u) + integrate_r3(u2));
    rep.lhs = lq;
    rep.rhs = h1;
    rep.slack = (h1 > 0.0 ? lq / h1 : 0.0) - rep.constant;
    rep.pass = rep.slack <= 0.0;
    return rep;
}

DecayReport decay_constant(const CylField& u, int grid_level) {
    const Grid& g = u.grid();
    DecayReport rep;
    rep.grid_level = grid_level;

    if (min_value(u) < 0.0) {
        rep.preconditions_ok = false;
        rep.detail = "field has negative values";
        return rep;
    }
    const int jc = g.mid_z();
    double worst = 0.0;
    int worst_i = -1;
    for (int i = 0; i < g.nr; ++i) {
        for (int j = jc; j + 1 < g.nz; ++j) {
            const double inc = u(i, j + 1) - u(i, j);
            if (inc > worst) { worst = inc; worst_i = i; }
        }
        for (int j = jc; j > 0; --j) {
            const double inc = u(i, j - 1) - u(i, j);
            if (inc > worst) { worst = inc; worst_i = i; }
        }
    }
    if (worst > 1e-10) {
        rep.preconditions_ok = false;
        std::ostringstream os;
        os << "row r=" << g.r[worst_i] << " increases in |z| by " << worst;
        rep.detail = os.str();
        return rep;
    }

    auto [ur, uz] = gradient(u);
    CylField ur2 = ur;
    for (double& x : ur2.values()) x *= x;
    CylField u2 = u;
    for (double& x : u2.values()) x *= x;
    const double denom = std::sqrt(std::sqrt(integrate_r3(ur2)) * std::sqrt(integrate_r3(u2)));
    if (denom == 0.0) {
        rep.constant = 0.0;
        return rep;
    }
    for (int i = 1; i < g.nr - 1; ++i) {
        for (int j = 1; j < g.nz - 1; ++j) {
            if (j == jc) continue;
            const double val =
                u(i, j) * std::pow(g.r[i], 1.5) * std::sqrt(std::fabs(g.z[j])) / denom;
            if (val > rep.constant) {
                rep.constant = val;
                rep.arg_i = i;
                rep.arg_j = j;
            }
        }
    }
    return rep;
}

InequalityReport check_nonexpansivity(const CylField& u, const CylField& v) {
    ensure_same_grid(u, v);
    const Grid& g = u.grid();
    InequalityReport rep;
    rep.id = "nonexpansivity";
    rep.constant = 1.0;
    const CylField us = steiner_symmetrize(u);
    const CylField vs = steiner_symmetrize(v);
    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        double a = 0.0, b = 0.0;
        for (int j = 0; j < g.nz; ++j) {
            const double ds = us(i, j) - vs(i, j);
            const double d = u(i, j) - v(i, j);
            a += ds * ds;
            b += d * d;
        }
        lhs += g.wr3[i] * a;
        rhs += g.wr3[i] * b;
    }
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.slack = lhs - rhs;
    rep.pass = rep.slack <= 1e-12 * (1.0 + rhs);
    return rep;
}

namespace {

// Constrained quadratic-form operator y = (K - sigma*M) x on the subspace of
// fields vanishing at the Dirichlet boundary; K is the weighted stiffness
// plus potential mass, M the diagonal r^3 mass.
class ShiftedOperator {
public:
    ShiftedOperator(const Grid& g, const Potential& V, double sigma) : g_(g), V_(V), sigma_(sigma) {}

    void apply(const CylField& x, CylField& y) const {
        for (int i = 0; i < g_.nr - 1; ++i) {
            for (int j = 1; j < g_.nz - 1; ++j) {
                double acc = 0.0;
                if (i > 0) acc += g_.mu3[i - 1] * (x(i, j) - x(i - 1, j));
                acc += g_.mu3[i] * (x(i, j) - x(i + 1, j));
                acc *= g_.cz[j] / (g_.dr * g_.dr);
                double az = 2.0 * x(i, j) - x(i, j - 1) - x(i, j + 1);
                acc += g_.wr3[i] * az / g_.dz;
                const double w = g_.wr3[i] * g_.cz[j];
                acc += w * (V_.at_node(g_, i, j) - sigma_) * x(i, j);
                y(i, j) = acc;
            }
        }
    }

    double diag(int i, int j) const {
        double d = g_.mu3[i];
        if (i > 0) d += g_.mu3[i - 1];
        d *= g_.cz[j] / (g_.dr * g_.dr);
        d += 2.0 * g_.wr3[i] / g_.dz;
        d += g_.wr3[i] * g_.cz[j] * (V_.at_node(g_, i, j) - sigma_);
        return d;
    }

private:
    const Grid& g_;
    const Potential& V_;
    double sigma_;
};

double dot_free(const Grid& g, const CylField& a, const CylField& b) {
    double s = 0.0;
    for (int i = 0; i < g.nr - 1; ++i)
        for (int j = 1; j < g.nz - 1; ++j) s += a(i, j) * b(i, j);
    return s;
}

// Jacobi-preconditioned CG on the constrained DOFs. Returns false on
// negative curvature (shift not SPD).
bool solve_cg(const Grid& g, const ShiftedOperator& op, const CylField& rhs, CylField& x,
              double rtol, int max_iters) {
    CylField r = rhs, z(rhs.grid_ptr()), p(rhs.grid_ptr()), Ap(rhs.grid_ptr());
    for (double& v : x.values()) v = 0.0;
    auto precond = [&](const CylField& in, CylField& out) {
        for (int i = 0; i < g.nr - 1; ++i)
            for (int j = 1; j < g.nz - 1; ++j) {
                const double d = op.diag(i, j);
                out(i, j) = d > 0.0 ? in(i, j) / d : in(i, j);
            }
    };
    precond(r, z);
    p = z;
    double rz = dot_free(g, r, z);
    const double rhs_norm = std::sqrt(dot_free(g, rhs, rhs));
    if (rhs_norm == 0.0) return true;
    for (int k = 0; k < max_iters; ++k) {
        op.apply(p, Ap);
        const double pAp = dot_free(g, p, Ap);
        if (pAp <= 0.0) return false;
        const double alpha = rz / pAp;
        for (int i = 0; i < g.nr - 1; ++i)
            for (int j = 1; j < g.nz - 1; ++j) {
                x(i, j) += alpha * p(i, j);
                r(i, j) -= alpha * Ap(i, j);
            }
        if (std::sqrt(dot_free(g, r, r)) <= rtol * rhs_norm) return true;
        precond(r, z);
        const double rz_new = dot_free(g, r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (int i = 0; i < g.nr - 1; ++i)
            for (int j = 1; j < g.nz - 1; ++j) p(i, j) = z(i, j) + beta * p(i, j);
    }
    return true;
}

}  // namespace

CoercivityReport coercivity_lambda_min(const GridPtr& grid, const Potential& V) {
    const Grid& g = *grid;
    CoercivityReport rep;

    auto rayleigh = [&](const CylField& x) {
        ShiftedOperator K(g, V, 0.0);
        CylField Kx(grid);
        K.apply(x, Kx);
        double num = dot_free(g, x, Kx);
        double den = 0.0;
        for (int i = 0; i < g.nr - 1; ++i)
            for (int j = 1; j < g.nz - 1; ++j) den += g.wr3[i] * g.cz[j] * x(i, j) * x(i, j);
        return num / den;
    };

    CylField x = gaussian_field(grid);
    apply_dirichlet(x);
    const double vmin = V.essinf(g);
    double sigma = vmin - 1.0;
    double sigma_safe = sigma;
    double rho = rayleigh(x);

    CylField rhs(grid), y(grid);
    int slow = 0;
    const int max_outer = 300;
    for (int k = 0; k < max_outer; ++k) {
        // rhs = M x
        for (int i = 0; i < g.nr - 1; ++i)
            for (int j = 1; j < g.nz - 1; ++j) rhs(i, j) = g.wr3[i] * g.cz[j] * x(i, j);
        ShiftedOperator op(g, V, sigma);
        if (!solve_cg(g, op, rhs, y, 1e-12, 20000)) {
            // Shift crossed the spectrum; back off toward the safe value.
            sigma = 0.5 * (sigma + sigma_safe);
            continue;
        }
        sigma_safe = sigma;
        double norm_m = 0.0;
        for (int i = 0; i < g.nr - 1; ++i)
            for (int j = 1; j < g.nz - 1; ++j) norm_m += g.wr3[i] * g.cz[j] * y(i, j) * y(i, j);
        norm_m = std::sqrt(norm_m);
        for (int i = 0; i < g.nr - 1; ++i)
            for (int j = 1; j < g.nz - 1; ++j) x(i, j) = y(i, j) / norm_m;
        const double rho_new = rayleigh(x);
        const double change = std::fabs(rho_new - rho);
        rho = rho_new;
        rep.iterations = k + 1;
        if (change <= 1e-9 * (1.0 + std::fabs(rho))) {
            if (++slow >= 2) {
                rep.converged = true;
                break;
            }
        } else {
            slow = 0;
        }
        // Move the shift toward the current estimate, with a safety margin
        // so the shifted operator stays positive definite.
        if (k >= 2) {
            const double margin = std::max(10.0 * change, 1e-6 * (1.0 + std::fabs(rho)));
            sigma = std::max(sigma, rho - margin);
        }
    }
    rep.lambda_min = rho;
    return rep;
}

}  // namespace curlcurl

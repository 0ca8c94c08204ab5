// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace curlcurl {

double dirichlet_energy(const CylField& u) {
    const Grid& g = u.grid();
    double a_r = 0.0;
    for (int j = 0; j < g.nz; ++j) {
        double col = 0.0;
        for (int i = 0; i < g.nr - 1; ++i) {
            const double d = u(i + 1, j) - u(i, j);
            col += g.mu3[i] * d * d;
        }
        a_r += g.cz[j] * col;
    }
    a_r /= g.dr * g.dr;

    double a_z = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        const auto row = u.row(i);
        double acc = 0.0;
        for (int j = 0; j < g.nz - 1; ++j) {
            const double d = row[j + 1] - row[j];
            acc += d * d;
        }
        a_z += g.wr3[i] * acc;
    }
    a_z /= g.dz;

    return a_r + a_z;
}

double weighted_norm_sq(const CylField& u, const Potential& V) {
    const Grid& g = u.grid();
    double pot = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        double row = 0.0;
        for (int j = 0; j < g.nz; ++j) {
            const double x = u(i, j);
            row += g.cz[j] * V.at_node(g, i, j) * x * x;
        }
        pot += g.wr3[i] * row;
    }
    return dirichlet_energy(u) + pot;
}

double weighted_norm(const CylField& u, const Potential& V) {
    const double sq = weighted_norm_sq(u, V);
    if (sq < 0.0)
        throw std::domain_error("weighted_norm: negative radicand; V is not coercive on this grid");
    return std::sqrt(sq);
}

double nonlinear_energy(const CylField& u, const Nonlinearity& f) {
    const Grid& g = u.grid();
    double total = 0.0;
    for (int i = 1; i < g.nr; ++i) {  // the r = 0 integrand is 0 by convention
        const double r = g.r[i], r2 = r * r;
        double row = 0.0;
        for (int j = 0; j < g.nz; ++j) {
            const double x = u(i, j);
            const double val = f.F_node(g, i, j, r2 * x * x) / (2.0 * r2);
            if (!std::isfinite(val))
                throw std::runtime_error("nonlinear_energy: non-finite F at node (" +
                                         std::to_string(i) + "," + std::to_string(j) + ")");
            row += g.cz[j] * val;
        }
        total += g.wr3[i] * row;
    }
    return total;
}

double nonlinear_pairing(const CylField& u, const Nonlinearity& f) {
    const Grid& g = u.grid();
    double total = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        const double r2 = g.r[i] * g.r[i];
        double row = 0.0;
        for (int j = 0; j < g.nz; ++j) {
            const double x = u(i, j);
            row += g.cz[j] * f.f_node(g, i, j, r2 * x * x) * x * x;
        }
        total += g.wr3[i] * row;
    }
    return total;
}

double energy(const CylField& u, const Potential& V, const Nonlinearity& f) {
    return 0.5 * weighted_norm_sq(u, V) - nonlinear_energy(u, f);
}

namespace {

// Shared linear part of the residual/gradient stencils. The interior row is
// the exact algebraic gradient of dirichlet_energy with respect to the
// r^3-weighted inner product: conservative differencing with exact cell
// masses of r^3 as transmissibilities.
inline double variational_radial(const CylField& u, const Grid& g, int i, int j) {
    double acc = 0.0;
    if (i > 0) acc += g.mu3[i - 1] * (u(i, j) - u(i - 1, j));
    if (i < g.nr - 1) acc += g.mu3[i] * (u(i, j) - u(i + 1, j));
    return acc / (g.wr3[i] * g.dr * g.dr);
}

inline double second_diff_z(const CylField& u, const Grid& g, int i, int j) {
    double acc = 0.0;
    if (j > 0) acc += u(i, j) - u(i, j - 1);
    if (j < g.nz - 1) acc += u(i, j) - u(i, j + 1);
    return acc / (g.dz * g.cz[j]);
}

}  // namespace

CylField pde_residual(const CylField& u, const Potential& V, const Nonlinearity& f) {
    const Grid& g = u.grid();
    CylField res(u.grid_ptr());
    for (int i = 0; i < g.nr - 1; ++i) {
        const double r2 = g.r[i] * g.r[i];
        for (int j = 1; j < g.nz - 1; ++j) {
            double lin;
            if (i == 0) {
                // regularized axis limit -4 u_rr from the even extension
                lin = -8.0 * (u(1, j) - u(0, j)) / (g.dr * g.dr);
            } else {
                lin = variational_radial(u, g, i, j);
            }
            lin += (2.0 * u(i, j) - u(i, j - 1) - u(i, j + 1)) / (g.dz * g.dz);
            const double x = u(i, j);
            res(i, j) = lin + (V.at_node(g, i, j) - f.f_node(g, i, j, r2 * x * x)) * x;
        }
    }
    return res;
}

CylField energy_gradient(const CylField& u, const Potential& V, const Nonlinearity& f) {
    const Grid& g = u.grid();
    CylField grad(u.grid_ptr());
    for (int i = 0; i < g.nr - 1; ++i) {
        const double r2 = g.r[i] * g.r[i];
        for (int j = 1; j < g.nz - 1; ++j) {
            const double x = u(i, j);
            grad(i, j) = variational_radial(u, g, i, j) + second_diff_z(u, g, i, j) +
                         (V.at_node(g, i, j) - f.f_node(g, i, j, r2 * x * x)) * x;
        }
    }
    return grad;
}

double inner_r3(const CylField& a, const CylField& b) {
    ensure_same_grid(a, b);
    const Grid& g = a.grid();
    double total = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        double row = 0.0;
        for (int j = 0; j < g.nz; ++j) row += g.cz[j] * a(i, j) * b(i, j);
        total += g.wr3[i] * row;
    }
    return total;
}

}  // namespace curlcurl

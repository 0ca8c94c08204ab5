// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/reconstruct3d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "curlcurl/parallel.hpp"

namespace curlcurl {

namespace {

// Thomas solve of the cubic-spline moment system on uniform spacing h.
// clamped_left: S'(x0) = 0; otherwise natural (M0 = 0). Right end natural.
std::vector<double> spline_moments(const double* f, int n, double h, bool clamped_left) {
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
    if (clamped_left) {
        b[0] = h / 3.0;
        c[0] = h / 6.0;
        d[0] = (f[1] - f[0]) / h;  // minus the prescribed slope 0
    } else {
        b[0] = 1.0;
        c[0] = 0.0;
        d[0] = 0.0;
    }
    for (int i = 1; i < n - 1; ++i) {
        a[i] = h / 6.0;
        b[i] = 2.0 * h / 3.0;
        c[i] = h / 6.0;
        d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h;
    }
    a[n - 1] = 0.0;
    b[n - 1] = 1.0;
    d[n - 1] = 0.0;

    for (int i = 1; i < n; ++i) {
        const double m = a[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        d[i] -= m * d[i - 1];
    }
    std::vector<double> M(n);
    M[n - 1] = d[n - 1] / b[n - 1];
    for (int i = n - 2; i >= 0; --i) M[i] = (d[i] - c[i] * M[i + 1]) / b[i];
    return M;
}

inline double cubic_eval(double fl, double fr, double ml, double mr, double h, double t) {
    const double s = 1.0 - t;
    return fl * s + fr * t + (h * h / 6.0) * ((s * s * s - s) * ml + (t * t * t - t) * mr);
}

}  // namespace

FieldInterpolant::FieldInterpolant(const CylField& u) : grid_(u.grid_ptr()) {
    const Grid& g = *grid_;
    val_.assign(u.values().begin(), u.values().end());
    mr_.assign(val_.size(), 0.0);
    mz_.assign(val_.size(), 0.0);
    mrz_.assign(val_.size(), 0.0);

    // r-moments per z-column (clamped at the axis).
    std::vector<double> col(g.nr);
    for (int j = 0; j < g.nz; ++j) {
        for (int i = 0; i < g.nr; ++i) col[i] = val_[g.index(i, j)];
        auto M = spline_moments(col.data(), g.nr, g.dr, /*clamped_left=*/true);
        for (int i = 0; i < g.nr; ++i) mr_[g.index(i, j)] = M[i];
    }
    // z-moments of the values and of the r-moments, per r-row.
    for (int i = 0; i < g.nr; ++i) {
        auto Mu = spline_moments(val_.data() + i * g.nz, g.nz, g.dz, false);
        auto Mm = spline_moments(mr_.data() + i * g.nz, g.nz, g.dz, false);
        for (int j = 0; j < g.nz; ++j) {
            mz_[g.index(i, j)] = Mu[j];
            mrz_[g.index(i, j)] = Mm[j];
        }
    }
}

double FieldInterpolant::cubic_z(const double* f, const double* m, int j, double t) const {
    const Grid& g = *grid_;
    return cubic_eval(f[j], f[j + 1], m[j], m[j + 1], g.dz, t);
}

double FieldInterpolant::operator()(double r, double z) const {
    const Grid& g = *grid_;
    if (r >= g.rmax) return 0.0;  // zero extension of the truncated field
    if (r < 0.0) r = -r;
    const double zc = std::clamp(z, -g.zmax, g.zmax);

    const int i = std::min(static_cast<int>(r / g.dr), g.nr - 2);
    const double tr = r / g.dr - i;
    int j = std::min(static_cast<int>((zc + g.zmax) / g.dz), g.nz - 2);
    const double tz = (zc + g.zmax) / g.dz - j;

    const double* vrow_l = val_.data() + i * g.nz;
    const double* vrow_r = val_.data() + (i + 1) * g.nz;
    const double* mzrow_l = mz_.data() + i * g.nz;
    const double* mzrow_r = mz_.data() + (i + 1) * g.nz;
    const double al = cubic_z(vrow_l, mzrow_l, j, tz);
    const double ar = cubic_z(vrow_r, mzrow_r, j, tz);

    const double* mrow_l = mr_.data() + i * g.nz;
    const double* mrow_r = mr_.data() + (i + 1) * g.nz;
    const double* mrzrow_l = mrz_.data() + i * g.nz;
    const double* mrzrow_r = mrz_.data() + (i + 1) * g.nz;
    const double bl = cubic_z(mrow_l, mrzrow_l, j, tz);
    const double br = cubic_z(mrow_r, mrzrow_r, j, tz);

    return cubic_eval(al, ar, bl, br, g.dr, tr);
}

VectorField3D reconstruct(const CylField& u, double L, int n) {
    const Grid& g = u.grid();
    if (!(L > 0.0) || L > std::min(g.rmax, g.zmax))
        throw std::invalid_argument("reconstruct: require 0 < L <= min(rmax, zmax)");
    if (n < 5) throw std::invalid_argument("reconstruct: need at least 5 nodes per axis");

    VectorField3D U;
    U.L = L;
    U.n = n;
    U.h = 2.0 * L / (n - 1);
    const size_t total = static_cast<size_t>(n) * n * n;
    U.u1.assign(total, 0.0);
    U.u2.assign(total, 0.0);
    U.u3.assign(total, 0.0);

    const FieldInterpolant interp(u);
    parallel_for(n, [&](int a) {
        const double x1 = U.coord(a);
        for (int b = 0; b < n; ++b) {
            const double x2 = U.coord(b);
            const double r = std::hypot(x1, x2);
            for (int c = 0; c < n; ++c) {
                const double x3 = U.coord(c);
                const double prof = interp(r, x3);
                const int k = U.index(a, b, c);
                U.u1[k] = -x2 * prof;
                U.u2[k] = x1 * prof;
            }
        }
    });
    return U;
}

ScalarField3D divergence(const VectorField3D& U) {
    ScalarField3D out;
    out.L = U.L;
    out.h = U.h;
    out.n = U.n;
    out.v.assign(U.u1.size(), 0.0);
    const int n = U.n;
    const double i2h = 1.0 / (2.0 * U.h);
    parallel_for(n - 2, [&](int ai) {
        const int a = ai + 1;
        for (int b = 1; b < n - 1; ++b)
            for (int c = 1; c < n - 1; ++c) {
                const double d1 = U.u1[U.index(a + 1, b, c)] - U.u1[U.index(a - 1, b, c)];
                const double d2 = U.u2[U.index(a, b + 1, c)] - U.u2[U.index(a, b - 1, c)];
                const double d3 = U.u3[U.index(a, b, c + 1)] - U.u3[U.index(a, b, c - 1)];
                out.v[out.index(a, b, c)] = (d1 + d2 + d3) * i2h;
            }
    });
    return out;
}

ScalarField3D curl_curl_residual(const VectorField3D& U, const Potential& V,
                                 const Nonlinearity& f) {
    const int n = U.n;
    const double i2h = 1.0 / (2.0 * U.h);
    std::vector<double> c1(U.u1.size(), 0.0), c2(U.u1.size(), 0.0), c3(U.u1.size(), 0.0);
    parallel_for(n - 2, [&](int ai) {
        const int a = ai + 1;
        for (int b = 1; b < n - 1; ++b)
            for (int c = 1; c < n - 1; ++c) {
                const int k = U.index(a, b, c);
                const double d2u3 = U.u3[U.index(a, b + 1, c)] - U.u3[U.index(a, b - 1, c)];
                const double d3u2 = U.u2[U.index(a, b, c + 1)] - U.u2[U.index(a, b, c - 1)];
                const double d3u1 = U.u1[U.index(a, b, c + 1)] - U.u1[U.index(a, b, c - 1)];
                const double d1u3 = U.u3[U.index(a + 1, b, c)] - U.u3[U.index(a - 1, b, c)];
                const double d1u2 = U.u2[U.index(a + 1, b, c)] - U.u2[U.index(a - 1, b, c)];
                const double d2u1 = U.u1[U.index(a, b + 1, c)] - U.u1[U.index(a, b - 1, c)];
                c1[k] = (d2u3 - d3u2) * i2h;
                c2[k] = (d3u1 - d1u3) * i2h;
                c3[k] = (d1u2 - d2u1) * i2h;
            }
    });

    ScalarField3D out;
    out.L = U.L;
    out.h = U.h;
    out.n = n;
    out.v.assign(U.u1.size(), 0.0);
    parallel_for(n - 4, [&](int ai) {
        const int a = ai + 2;
        const double x1 = U.coord(a);
        for (int b = 2; b < n - 2; ++b) {
            const double x2 = U.coord(b);
            const double r = std::hypot(x1, x2);
            if (r <= 2.0 * U.h) continue;  // axis handled on the 2D grid
            for (int c = 2; c < n - 2; ++c) {
                const double x3 = U.coord(c);
                const int k = U.index(a, b, c);
                const double d2c3 = c3[U.index(a, b + 1, c)] - c3[U.index(a, b - 1, c)];
                const double d3c2 = c2[U.index(a, b, c + 1)] - c2[U.index(a, b, c - 1)];
                const double d3c1 = c1[U.index(a, b, c + 1)] - c1[U.index(a, b, c - 1)];
                const double d1c3 = c3[U.index(a + 1, b, c)] - c3[U.index(a - 1, b, c)];
                const double d1c2 = c2[U.index(a + 1, b, c)] - c2[U.index(a - 1, b, c)];
                const double d2c1 = c1[U.index(a, b + 1, c)] - c1[U.index(a, b - 1, c)];
                const double cc1 = (d2c3 - d3c2) * i2h;
                const double cc2 = (d3c1 - d1c3) * i2h;
                const double cc3 = (d1c2 - d2c1) * i2h;
                const double U1 = U.u1[k], U2 = U.u2[k], U3 = U.u3[k];
                const double mag2 = U1 * U1 + U2 * U2 + U3 * U3;
                const double vc = V.at(r, x3);
                const double fc = f.f(r, x3, mag2);
                const double r1 = cc1 + (vc - fc) * U1;
                const double r2 = cc2 + (vc - fc) * U2;
                const double r3 = cc3 + (vc - fc) * U3;
                out.v[k] = std::sqrt(r1 * r1 + r2 * r2 + r3 * r3);
            }
        }
    });
    return out;
}

double max_abs3d(const ScalarField3D& s) {
    double m = 0.0;
    for (double x : s.v) m = std::max(m, std::fabs(x));
    return m;
}

}  // namespace curlcurl

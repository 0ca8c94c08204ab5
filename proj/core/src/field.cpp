// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/field.hpp"

#include <cmath>
#include <stdexcept>

namespace curlcurl {

CylField::CylField(GridPtr grid) : grid_(std::move(grid)) {
    if (!grid_) throw std::invalid_argument("CylField: null grid");
    v_.assign(static_cast<size_t>(grid_->size()), 0.0);
}

CylField::CylField(GridPtr grid, std::vector<double> values) : grid_(std::move(grid)), v_(std::move(values)) {
    if (!grid_) throw std::invalid_argument("CylField: null grid");
    if (v_.size() != static_cast<size_t>(grid_->size()))
        throw std::invalid_argument("CylField: value count does not match grid");
}

bool CylField::all_finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

void CylField::fill(const std::function<double(double, double)>& fn) {
    const Grid& g = *grid_;
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j) v_[g.index(i, j)] = fn(g.r[i], g.z[j]);
}

void ensure_same_grid(const CylField& a, const CylField& b) {
    if (a.grid_ptr().get() == b.grid_ptr().get()) return;
    if (!a.grid().same_layout(b.grid()))
        throw std::invalid_argument("fields live on different grids");
}

double integrate_r3(const CylField& g) {
    const Grid& gr = g.grid();
    double total = 0.0;
    for (int i = 0; i < gr.nr; ++i) {
        double row = 0.0;
        const auto vals = g.row(i);
        for (int j = 0; j < gr.nz; ++j) row += gr.cz[j] * vals[j];
        total += gr.wr3[i] * row;
    }
    return total;
}

double integrate_r1(const CylField& g) {
    const Grid& gr = g.grid();
    double total = 0.0;
    for (int i = 0; i < gr.nr; ++i) {
        double row = 0.0;
        const auto vals = g.row(i);
        for (int j = 0; j < gr.nz; ++j) row += gr.cz[j] * vals[j];
        total += gr.wr1[i] * row;
    }
    return total;
}

std::pair<CylField, CylField> gradient(const CylField& u) {
    const Grid& g = u.grid();
    if (g.nr < 3 || g.nz < 3) throw std::invalid_argument("gradient: grid too small");
    CylField ur(u.grid_ptr()), uz(u.grid_ptr());
    const double i2dr = 1.0 / (2.0 * g.dr), i2dz = 1.0 / (2.0 * g.dz);
    for (int i = 0; i < g.nr; ++i) {
        for (int j = 0; j < g.nz; ++j) {
            double dudr;
            if (i == 0) {
                dudr = 0.0;  // even extension across the axis
            } else if (i == g.nr - 1) {
                dudr = (3.0 * u(i, j) - 4.0 * u(i - 1, j) + u(i - 2, j)) * i2dr;
            } else {
                dudr = (u(i + 1, j) - u(i - 1, j)) * i2dr;
            }
            double dudz;
            if (j == 0) {
                dudz = (-3.0 * u(i, j) + 4.0 * u(i, j + 1) - u(i, j + 2)) * i2dz;
            } else if (j == g.nz - 1) {
                dudz = (3.0 * u(i, j) - 4.0 * u(i, j - 1) + u(i, j - 2)) * i2dz;
            } else {
                dudz = (u(i, j + 1) - u(i, j - 1)) * i2dz;
            }
            ur(i, j) = dudr;
            uz(i, j) = dudz;
        }
    }
    return {std::move(ur), std::move(uz)};
}

CylField operator+(const CylField& a, const CylField& b) {
    ensure_same_grid(a, b);
    CylField out = a;
    auto ov = out.values();
    auto bv = b.values();
    for (size_t k = 0; k < ov.size(); ++k) ov[k] += bv[k];
    return out;
}

CylField operator-(const CylField& a, const CylField& b) {
    ensure_same_grid(a, b);
    CylField out = a;
    auto ov = out.values();
    auto bv = b.values();
    for (size_t k = 0; k < ov.size(); ++k) ov[k] -= bv[k];
    return out;
}

CylField operator*(double s, const CylField& a) {
    CylField out = a;
    for (double& x : out.values()) x *= s;
    return out;
}

void axpy(double alpha, const CylField& x, CylField& y) {
    ensure_same_grid(x, y);
    auto xv = x.values();
    auto yv = y.values();
    for (size_t k = 0; k < yv.size(); ++k) yv[k] += alpha * xv[k];
}

void clip_negative(CylField& u) {
    for (double& x : u.values())
        if (x < 0.0) x = 0.0;
}

void apply_dirichlet(CylField& u) {
    const Grid& g = u.grid();
    for (int j = 0; j < g.nz; ++j) u(g.nr - 1, j) = 0.0;
    for (int i = 0; i < g.nr; ++i) {
        u(i, 0) = 0.0;
        u(i, g.nz - 1) = 0.0;
    }
}

double max_abs(const CylField& u) {
    double m = 0.0;
    for (double x : u.values()) m = std::max(m, std::fabs(x));
    return m;
}

double min_value(const CylField& u) {
    double m = u.values()[0];
    for (double x : u.values()) m = std::min(m, x);
    return m;
}

CylField gaussian_field(const GridPtr& grid) {
    CylField u(grid);
    u.fill([](double r, double z) { return std::exp(-0.5 * (r * r + z * z)); });
    return u;
}

}  // namespace curlcurl

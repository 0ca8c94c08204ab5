// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/nonlinearity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace curlcurl {

Coefficient Coefficient::constant(double c) {
    Coefficient out;
    out.constant_ = true;
    out.value_ = c;
    return out;
}

Coefficient Coefficient::from_field(CylField field) {
    Coefficient out;
    out.constant_ = false;
    out.field_ = std::move(field);
    return out;
}

double Coefficient::at(double r, double z) const {
    if (constant_) return value_;
    const Grid& g = field_.grid();
    double x = std::clamp(r / g.dr, 0.0, double(g.nr - 1));
    double y = std::clamp((z + g.zmax) / g.dz, 0.0, double(g.nz - 1));
    int i = std::min(int(x), g.nr - 2);
    int j = std::min(int(y), g.nz - 2);
    double tx = x - i, ty = y - j;
    return (1 - tx) * (1 - ty) * field_(i, j) + tx * (1 - ty) * field_(i + 1, j) +
           (1 - tx) * ty * field_(i, j + 1) + tx * ty * field_(i + 1, j + 1);
}

double Coefficient::max_value(const Grid&) const {
    if (constant_) return value_;
    double m = field_.values()[0];
    for (double x : field_.values()) m = std::max(m, x);
    return m;
}

double Coefficient::min_value(const Grid&) const {
    if (constant_) return value_;
    double m = field_.values()[0];
    for (double x : field_.values()) m = std::min(m, x);
    return m;
}

namespace {

// s^e with fast paths for the half-integer exponents of p in {2,3,4,5}.
inline double pow_s(double s, double e) {
    if (e == 1.0) return s;
    if (e == 0.5) return std::sqrt(s);
    if (e == 1.5) return s * std::sqrt(s);
    if (e == 2.0) return s * s;
    if (e == 2.5) return s * s * std::sqrt(s);
    if (e == 3.0) return s * s * s;
    return std::pow(s, e);
}

}  // namespace

Nonlinearity Nonlinearity::power(double p, Coefficient gamma) {
    if (!(p > 1.0 && p < 5.0)) throw std::invalid_argument("power nonlinearity: p must lie in (1,5)");
    Nonlinearity out;
    out.kind_ = NonlinearityKind::Power;
    out.p_ = p;
    out.gamma_ = std::move(gamma);
    return out;
}

Nonlinearity Nonlinearity::logarithmic(Coefficient gamma, double p) {
    Nonlinearity out;
    out.kind_ = NonlinearityKind::Log;
    out.p_ = p;
    out.gamma_ = std::move(gamma);
    return out;
}

Nonlinearity Nonlinearity::custom(std::function<double(double, double, double)> f,
                                  std::function<double(double, double, double)> F, double p) {
    Nonlinearity out;
    out.kind_ = NonlinearityKind::Custom;
    out.p_ = p;
    out.custom_f_ = std::move(f);
    out.custom_F_ = std::move(F);
    return out;
}

double Nonlinearity::shape_f(double s) const {
    if (kind_ == NonlinearityKind::Power) return pow_s(s, 0.5 * (p_ - 1.0));
    return std::log1p(s);
}

double Nonlinearity::shape_F(double s) const {
    if (kind_ == NonlinearityKind::Power) return pow_s(s, 0.5 * (p_ + 1.0)) * 2.0 / (p_ + 1.0);
    return (1.0 + s) * std::log1p(s) - s;
}

double Nonlinearity::f(double r, double z, double s) const {
    if (kind_ == NonlinearityKind::Custom) return custom_f_(r, z, s);
    return gamma_.at(r, z) * shape_f(s);
}

double Nonlinearity::F(double r, double z, double s) const {
    if (kind_ == NonlinearityKind::Custom) return custom_F_(r, z, s);
    return gamma_.at(r, z) * shape_F(s);
}

double Nonlinearity::f_node(const Grid& g, int i, int j, double s) const {
    if (kind_ == NonlinearityKind::Custom) return custom_f_(g.r[i], g.z[j], s);
    return gamma_.at_node(g, i, j) * shape_f(s);
}

double Nonlinearity::F_node(const Grid& g, int i, int j, double s) const {
    if (kind_ == NonlinearityKind::Custom) return custom_F_(g.r[i], g.z[j], s);
    return gamma_.at_node(g, i, j) * shape_F(s);
}

std::vector<double> default_s_ladder() {
    std::vector<double> s;
    for (int k = 0; k <= 48; ++k) s.push_back(std::pow(10.0, -12.0 + 0.5 * k));
    return s;
}

NonlinearityValidation validate_nonlinearity(const Nonlinearity& f, const Grid& grid,
                                             const std::vector<double>& ladder) {
    if (ladder.size() < 3) throw std::invalid_argument("validate_nonlinearity: ladder too short");
    for (size_t k = 1; k < ladder.size(); ++k)
        if (!(ladder[k] > ladder[k - 1]))
            throw std::invalid_argument("validate_nonlinearity: ladder must be strictly increasing");

    NonlinearityValidation rep;
    std::ostringstream detail;

    // Sample nodes: axis, a mid radius, the outer edge, and the analogous z rows.
    std::vector<int> is = {0, grid.nr / 2, grid.nr - 1};
    std::vector<int> js = {0, grid.mid_z(), grid.nz - 1};
    const double expo = 0.5 * (f.growth_exponent() - 1.0);

    // (i): f >= 0 and a bounded ratio against 1 + s^((p-1)/2); c is estimated.
    bool nonneg = true;
    double cmax = 0.0;
    double f_tail_max = 0.0;
    for (int i : is)
        for (int j : js)
            for (double s : ladder) {
                const double v = f.f_node(grid, i, j, s);
                if (v < 0.0) {
                    nonneg = false;
                    if (detail.tellp() == 0)
                        detail << "(i) f<0 at s=" << s;
                }
                cmax = std::max(cmax, v / (1.0 + std::pow(s, expo)));
                if (s == ladder.back()) f_tail_max = std::max(f_tail_max, v);
            }
    rep.c_estimate = cmax;
    rep.growth_bound = nonneg && std::isfinite(cmax);

    // (ii): smallness at the bottom of the ladder, relative to the tail scale.
    {
        double f_small = 0.0;
        for (int i : is)
            for (int j : js) f_small = std::max(f_small, f.f_node(grid, i, j, ladder.front()));
        const double thresh = 1e-4 * (1.0 + f_tail_max);
        rep.vanishes_at_zero = f_small <= thresh;
        if (!rep.vanishes_at_zero && detail.tellp() == 0)
            detail << "(ii) f(s_min)=" << f_small << " above " << thresh;
    }

    // (iii): strict monotonicity across the ladder at every sampled node
    // (the positive-radius nodes; at r = 0 the argument r^2 u^2 is always 0).
    {
        bool mono = true;
        for (int i : is)
            for (int j : js)
                for (size_t k = 0; k + 1 < ladder.size() && mono; ++k) {
                    const double lo = f.f_node(grid, i, j, ladder[k]);
                    const double hi = f.f_node(grid, i, j, ladder[k + 1]);
                    if (!(hi > lo)) {
                        mono = false;
                        if (detail.tellp() == 0)
                            detail << "(iii) f not strictly increasing between s=" << ladder[k]
                                   << " and s=" << ladder[k + 1];
                    }
                }
        rep.strictly_increasing = mono;
    }

    // (iv): F(s)/s increasing on the tail and growing past it.
    {
        const double s_top = ladder.back();
        const int i = is[1], j = js[1];
        const double a = f.F_node(grid, i, j, s_top) / s_top;
        const double b = f.F_node(grid, i, j, s_top * 1e4) / (s_top * 1e4);
        bool tail_increasing = true;
        for (size_t k = ladder.size() - 5; k + 1 < ladder.size(); ++k) {
            const double q0 = f.F_node(grid, i, j, ladder[k]) / ladder[k];
            const double q1 = f.F_node(grid, i, j, ladder[k + 1]) / ladder[k + 1];
            if (!(q1 > q0)) tail_increasing = false;
        }
        rep.superlinear_primitive = tail_increasing && b >= 1.2 * a;
        if (!rep.superlinear_primitive && detail.tellp() == 0)
            detail << "(iv) F(s)/s not superlinear: " << a << " -> " << b;
    }

    // (v): z -> f(r,z,(s+sig)^2)(s+sig)^2 - f(r,z,s^2)s^2 symmetric nonincreasing.
    {
        bool ok = true;
        const double margin = 1e-12;
        for (int i : is) {
            for (double s : {0.0, 0.5, 2.0}) {
                for (double sig : {0.1, 1.0, 10.0}) {
                    std::vector<double> phi(grid.nz);
                    for (int j = 0; j < grid.nz; ++j) {
                        const double hi = s + sig;
                        phi[j] = f.f_node(grid, i, j, hi * hi) * hi * hi -
                                 f.f_node(grid, i, j, s * s) * s * s;
                    }
                    const int jc = grid.mid_z();
                    for (int j = 0; j < grid.nz && ok; ++j) {
                        const int jm = grid.nz - 1 - j;
                        const double scale = margin * (1.0 + std::fabs(phi[j]));
                        if (std::fabs(phi[j] - phi[jm]) > scale) ok = false;
                        if (j > jc && phi[j] > phi[j - 1] + scale) ok = false;
                    }
                    if (!ok && detail.tellp() == 0)
                        detail << "(v) increment not symmetric nonincreasing at r=" << grid.r[i]
                               << " s=" << s << " sigma=" << sig;
                }
            }
        }
        rep.z_monotone_increments = ok;
    }

    rep.detail = detail.str();
    return rep;
}

}  // namespace curlcurl

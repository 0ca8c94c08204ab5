// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "curlcurl/grid.hpp"

namespace curlcurl {

/// Scalar nodal function u(r_i, z_j) on a Grid, stored row-major with the
/// z index fastest. One row (fixed i) is the z-section at radius r_i.
class CylField {
public:
    CylField() = default;
    explicit CylField(GridPtr grid);
    CylField(GridPtr grid, std::vector<double> values);

    const Grid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }

    double operator()(int i, int j) const { return v_[grid_->index(i, j)]; }
    double& operator()(int i, int j) { return v_[grid_->index(i, j)]; }

    std::span<const double> values() const { return v_; }
    std::span<double> values() { return v_; }
    std::span<const double> row(int i) const { return {v_.data() + i * grid_->nz, static_cast<size_t>(grid_->nz)}; }
    std::span<double> row(int i) { return {v_.data() + i * grid_->nz, static_cast<size_t>(grid_->nz)}; }

    bool all_finite() const;

    /// Fills from a callable u(r, z).
    void fill(const std::function<double(double, double)>& fn);

private:
    GridPtr grid_;
    std::vector<double> v_;
};

/// Throws std::invalid_argument unless both fields share one grid layout.
void ensure_same_grid(const CylField& a, const CylField& b);

/// Trapezoidal (product-integration) approximation of the integral of g
/// against r^3 dr dz over the truncated domain.
double integrate_r3(const CylField& g);

/// Same with the r dr dz measure.
double integrate_r1(const CylField& g);

/// Second-order nodal gradient (d/dr, d/dz). Central differences in the
/// interior, one-sided second-order stencils at the outer boundaries. At
/// r = 0 the r-derivative uses the even extension u(-dr) = u(dr), hence 0.
std::pair<CylField, CylField> gradient(const CylField& u);

// Small arithmetic helpers used by the solver and the test suites.
CylField operator+(const CylField& a, const CylField& b);
CylField operator-(const CylField& a, const CylField& b);
CylField operator*(double s, const CylField& a);
void axpy(double alpha, const CylField& x, CylField& y);  // y += alpha*x

/// Clamps negative nodal values to zero in place.
void clip_negative(CylField& u);

/// Zeroes the Dirichlet boundary nodes (r = rmax and |z| = zmax) in place.
void apply_dirichlet(CylField& u);

double max_abs(const CylField& u);
double min_value(const CylField& u);

/// e^{-(r^2+z^2)/2} sampled on the grid; the solver's default initial guess.
CylField gaussian_field(const GridPtr& grid);

}  // namespace curlcurl

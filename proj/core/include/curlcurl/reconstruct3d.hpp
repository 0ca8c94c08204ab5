// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "curlcurl/functionals.hpp"

namespace curlcurl {

/// C2 tensor-product cubic spline interpolant of a cylindrical field.
/// The r-splines are clamped at the axis with du/dr = 0 (the axis-regularity
/// condition of the function space) and natural at rmax; the z-splines are
/// natural at both ends. C2 smoothness keeps finite-difference stencils of
/// the interpolated field convergent, which a bilinear interpolant does not.
class FieldInterpolant {
public:
    explicit FieldInterpolant(const CylField& u);
    /// Evaluates at (r, z); r beyond rmax uses the zero extension of the
    /// truncated field, z is clamped to the grid box.
    double operator()(double r, double z) const;

private:
    GridPtr grid_;
    std::vector<double> val_;   // u
    std::vector<double> mr_;    // d2u/dr2 spline moments
    std::vector<double> mz_;    // d2u/dz2 moments of u
    std::vector<double> mrz_;   // d2/dz2 moments of mr
    double cubic_z(const double* f, const double* m, int j, double t) const;
};

/// Uniform 3D grid over [-L,L]^3 holding the reconstructed vector field
/// U(x) = u(r, x3) * (-x2, x1, 0) with r = sqrt(x1^2 + x2^2).
struct VectorField3D {
    double L = 0.0;
    double h = 0.0;
    int n = 0;
    std::vector<double> u1, u2, u3;
    int index(int a, int b, int c) const { return (a * n + b) * n + c; }
    double coord(int a) const { return -L + a * h; }
};

struct ScalarField3D {
    double L = 0.0;
    double h = 0.0;
    int n = 0;
    std::vector<double> v;
    int index(int a, int b, int c) const { return (a * n + b) * n + c; }
    double coord(int a) const { return -L + a * h; }
};

/// Lifts the scalar profile through the ansatz onto an n^3 grid over
/// [-L,L]^3. Requires 0 < L <= min(rmax, zmax) and n >= 5; throws
/// std::invalid_argument otherwise.
VectorField3D reconstruct(const CylField& u, double L, int n);

/// Central-difference divergence, interior nodes only (one-cell margin).
ScalarField3D divergence(const VectorField3D& U);

/// Pointwise norm of curl(curl U) + V U - f(.,|U|^2) U via nested central
/// differences; two-cell margin, and nodes with r <= 2h are skipped (axis
/// stencil pollution; the axis behavior is certified on the 2D grid).
ScalarField3D curl_curl_residual(const VectorField3D& U, const Potential& V,
                                 const Nonlinearity& f);

/// Max |v| over the evaluated region.
double max_abs3d(const ScalarField3D& s);

}  // namespace curlcurl

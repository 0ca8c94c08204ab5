// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "curlcurl/field.hpp"
#include "curlcurl/nonlinearity.hpp"
#include "curlcurl/potential.hpp"

namespace curlcurl {

/// Discrete Dirichlet energy  int |grad u|^2 r^3 dr dz  of the piecewise
/// linear interpolant, directionwise:
///   radial part: cell differences weighted by the exact cell mass of r^3,
///   axial part:  cell differences weighted by the nodal r^3 weights.
/// This is the quadratic form whose exact algebraic gradient is the interior
/// stencil of pde_residual, which makes the energy/residual duality checks
/// tight.
double dirichlet_energy(const CylField& u);

/// Squared equivalent norm  int (|grad u|^2 + V u^2) r^3.
double weighted_norm_sq(const CylField& u, const Potential& V);

/// The equivalent norm. Throws std::domain_error if the radicand is
/// negative (V fails coercivity on this grid).
double weighted_norm(const CylField& u, const Potential& V);

/// I(u) = int F(r,z,r^2 u^2) / (2 r^2) * r^3. The integrand at r = 0 is 0.
double nonlinear_energy(const CylField& u, const Nonlinearity& f);

/// I'(u)[u] = int f(r,z,r^2 u^2) u^2 r^3.
double nonlinear_pairing(const CylField& u, const Nonlinearity& f);

/// J(u) = 1/2 ||u||_V^2 - I(u). Exactly 1/2*weighted_norm_sq - nonlinear_energy.
double energy(const CylField& u, const Potential& V, const Nonlinearity& f);

/// Discrete strong-form residual of
///   -(1/r^3) d/dr (r^3 du/dr) - d^2u/dz^2 + V u - f(r,z,r^2u^2) u.
/// Interior nodes use the conservative cell-average stencil (the exact
/// gradient of the discrete energy). At r = 0 the radial operator is the
/// regularized limit 4 u_rr obtained from the even extension. Outer
/// boundary nodes (r = rmax, |z| = zmax) are reported as 0.
CylField pde_residual(const CylField& u, const Potential& V, const Nonlinearity& f);

/// Exact algebraic gradient of the discrete energy J with respect to the
/// r^3-weighted inner product; equals pde_residual except on the axis
/// column, where it keeps the variational row instead of the pointwise
/// limit. Dirichlet rows are zeroed. The solver descends along this field.
CylField energy_gradient(const CylField& u, const Potential& V, const Nonlinearity& f);

/// Weighted L^2(r^3) inner product of two nodal fields.
double inner_r3(const CylField& a, const CylField& b);

}  // namespace curlcurl

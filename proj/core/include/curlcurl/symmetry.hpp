// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "curlcurl/functionals.hpp"

namespace curlcurl {

/// Places the multiset of row values symmetric-decreasing about the center
/// node: largest at z = 0, then alternately at the nearest unused node,
/// positive-z side first. The value multiset is preserved exactly.
void symmetrize_row(std::span<const double> row, std::span<double> out);

/// Steiner symmetrization in z, rowwise for each fixed r. Input values must
/// be nonnegative; a negative node throws std::invalid_argument.
CylField steiner_symmetrize(const CylField& u);

struct SymmetryReport {
    double norm_before = 0.0, norm_after = 0.0;   // ||u||_V and ||u*||_V
    double I_before = 0.0, I_after = 0.0;         // I(u), I(u*)
    double Iprime_before = 0.0, Iprime_after = 0.0;
    std::vector<std::pair<std::string, double>> violations;  // (inequality id, slack)
    bool preconditions_ok = true;
    std::string precondition_detail;
    bool pass() const { return preconditions_ok && violations.empty(); }
};

/// Checks the rearrangement inequalities
///   ||u*||_V <= ||u||_V,   I(u) <= I(u*),   I'(u)[u] <= I'(u*)[u*],
/// rowwise L^2 preservation, and the per-row z-sectional Dirichlet energy
/// (with zero extension past the ends, for which the discrete inequality is
/// exact). Precondition failures are reported, not thrown.
SymmetryReport check_rearrangement(const CylField& u, const Potential& V, const Nonlinearity& f,
                                   double tol_scale = 1e-10);

/// Per-row z-Dirichlet energy sum_j (u_{j+1}-u_j)^2/dz of the zero-extended
/// row (ghost zeros beyond both ends).
double row_z_energy_extended(std::span<const double> row, double dz);

}  // namespace curlcurl

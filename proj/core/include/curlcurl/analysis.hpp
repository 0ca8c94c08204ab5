// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "curlcurl/functionals.hpp"

namespace curlcurl {

struct InequalityReport {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double constant = 1.0;  // the constant multiplying rhs
    bool pass = false;
    double slack = 0.0;  // lhs - constant*rhs
};

/// Hardy inequality in the r^3-weighted space:
///   int u^2/r^2 r^3 <= C_H int |grad u|^2 r^3   with C_H = 1
/// (the sharp 4-d radial constant). The left side is the r-measure integral
/// of u^2, so the axis column is regular.
InequalityReport check_hardy(const CylField& u);

/// Embedding ratio ||r u||_{L^q(r dr dz)} / ||u||_{H^1(r^3 dr dz)} for
/// q in [2,6], checked against the frozen corpus constant C_emb.
InequalityReport check_embedding(const CylField& u, double q);

/// Frozen over a 200-field seeded calibration corpus (q in {2,4,6}).
inline constexpr double kEmbeddingConstant = 1.5;

struct DecayReport {
    double constant = 0.0;  // sup of u r^(3/2) |z|^(1/2) / (||du/dr||^(1/2) ||u||^(1/2))
    int arg_i = 0, arg_j = 0;
    int grid_level = 0;
    bool preconditions_ok = true;
    std::string detail;
};

/// Empirical constant of the pointwise decay bound for fields in the
/// discrete symmetry cone (u >= 0, rows nonincreasing in |z|). A row that
/// increases in |z| beyond 1e-10 is a precondition failure.
DecayReport decay_constant(const CylField& u, int grid_level = 0);

/// Rowwise nonexpansivity of the rearrangement, aggregated with r^3 weights:
///   sum_i w3_i ||u*_i - v*_i||^2 <= sum_i w3_i ||u_i - v_i||^2.
InequalityReport check_nonexpansivity(const CylField& u, const CylField& v);

struct CoercivityReport {
    double lambda_min = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Smallest Rayleigh quotient of (dirichlet form + V mass) / (r^3 mass) over
/// the discrete space with Dirichlet outer boundary, by shifted inverse
/// power iteration (matrix-free CG solves) to 1e-8 relative.
CoercivityReport coercivity_lambda_min(const GridPtr& grid, const Potential& V);

}  // namespace curlcurl

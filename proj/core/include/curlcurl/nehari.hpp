// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curlcurl/symmetry.hpp"

namespace curlcurl {

/// Relative Nehari residual |  ||u||_V^2 - I'(u)[u] | / ||u||_V^2.
double nehari_residual(const CylField& u, const Potential& V, const Nonlinearity& f);

/// The unique t > 0 with t^2 ||u||^2 = I'(tu)[tu], located by bracketing and
/// bisection of g(t) = ||u||^2 - I'(tu)[tu]/t^2 (strictly decreasing in t)
/// and refined to 1e-12 relative. Throws std::invalid_argument for u = 0 and
/// std::runtime_error when no bracket exists in [1e-8, 1e8] (a nonlinearity
/// without superlinear growth on this grid).
double nehari_scale(const CylField& u, const Potential& V, const Nonlinearity& f);

/// nehari_scale(u) * u; its Nehari residual is below 1e-10 relative.
CylField nehari_project(const CylField& u, const Potential& V, const Nonlinearity& f);

struct SolverConfig {
    int max_iters = 20000;
    double tol_nehari = 1e-9;       // relative Nehari residual at acceptance
    double tol_J = 1e-10;           // relative energy stagnation per step
    int symmetrize_every = 1;       // iteration period of the Steiner step
    double step_init = 0.0;         // 0 = choose from a Gershgorin bound
    double step_shrink = 0.5;
    double armijo_c = 1e-4;
    int max_backtracks = 40;
    int stagnation_window = 5;      // consecutive small-change iterations to stop
};

struct TraceRow {
    int iter;
    double J;
    double residual;  // relative Nehari residual
    double t;         // projection scale used this iteration
};

struct SolveReport {
    CylField u;
    double J = 0.0;
    double nehari_res = 0.0;
    int iterations = 0;
    bool converged = false;
    bool symmetric = false;
    bool positive = false;
    std::vector<TraceRow> trace;
    std::string error;  // nonempty when the run aborted (e.g. no Nehari bracket)
};

/// Minimizing-sequence iteration: clip the negative part, Steiner-symmetrize,
/// project onto the Nehari set, then take an Armijo-backtracked descent step
/// along the negative discrete energy gradient, re-projecting each candidate.
/// Steps that would increase J beyond tol_J are rejected. Convergence:
/// Nehari residual below tol_nehari and relative J change below tol_J over
/// `stagnation_window` consecutive iterations.
SolveReport solve_ground_state(const GridPtr& grid, const Potential& V, const Nonlinearity& f,
                               const SolverConfig& cfg, std::optional<CylField> init = std::nullopt);

struct StepDiagnostics {
    double t_star = 0.0;      // projection scale of the symmetrized field
    double J_before = 0.0;    // J(u)
    double J_after = 0.0;     // J(t* u*)
    double slack_t = 0.0;     // t* - 1, must be <= tol
    double slack_J = 0.0;     // J_after - J_before, must be <= tol
    bool t_le_one = false;
    bool J_nonincreasing = false;
    bool pass() const { return t_le_one && J_nonincreasing; }
};

/// For u in the Nehari set with u >= 0: certifies the discrete analogue of
/// the minimizing-sequence chain, t* <= 1 and J(t* u*) <= J(u).
StepDiagnostics step_diagnostics(const CylField& u, const Potential& V, const Nonlinearity& f,
                                 double tol = 1e-8);

}  // namespace curlcurl

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

namespace curlcurl {

/// Truncated tensor-product discretization of the half-plane (0,rmax) x (-zmax,zmax).
///
/// Nodes are uniform, r_i = i*dr and z_j = -zmax + j*dz, with nz odd so that
/// z = 0 is a node. Quadrature weights integrate the piecewise-linear
/// interpolant exactly against the measures r^3 dr dz and r dr dz, so the
/// total weight equals the closed-form weighted volume to machine precision.
struct Grid {
    double rmax = 0.0;
    double zmax = 0.0;
    int nr = 0;
    int nz = 0;
    double dr = 0.0;
    double dz = 0.0;

    std::vector<double> r;    // nr nodes, r[0] = 0
    std::vector<double> z;    // nz nodes, exactly antisymmetric about the midpoint
    std::vector<double> wr3;  // nodal weights for the r^3 dr measure
    std::vector<double> wr1;  // nodal weights for the r dr measure
    std::vector<double> cz;   // nodal weights for the dz measure (trapezoid)
    std::vector<double> mu3;  // cell masses: integral of r^3 over [r_i, r_{i+1}]

    int size() const { return nr * nz; }
    int index(int i, int j) const { return i * nz + j; }
    int mid_z() const { return (nz - 1) / 2; }

    /// Combined weight for the r^3 dr dz measure at node (i,j).
    double weight3(int i, int j) const { return wr3[i] * cz[j]; }
    /// Combined weight for the r dr dz measure at node (i,j).
    double weight1(int i, int j) const { return wr1[i] * cz[j]; }

    bool same_layout(const Grid& other) const;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Builds a grid. Throws std::invalid_argument for nonpositive extents,
/// nr or nz < 3, or even nz.
GridPtr make_grid(double rmax, double zmax, int nr, int nz);

}  // namespace curlcurl

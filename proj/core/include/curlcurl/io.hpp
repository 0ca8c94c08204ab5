// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "curlcurl/nehari.hpp"
#include "curlcurl/reconstruct3d.hpp"

namespace curlcurl {

/// Writes `r,z,value` rows, row-major over (i,j), 17 significant digits.
void write_field_csv(const CylField& u, const std::string& path);

/// Reads a field CSV written by write_field_csv (or shaped like it) and
/// rebuilds the grid from the node coordinates. Throws std::runtime_error
/// on malformed input or non-uniform node spacing.
CylField read_field_csv(const std::string& path);

/// Writes `iter,J,residual,t` rows.
void write_trace_csv(const std::vector<TraceRow>& trace, const std::string& path);

/// VTK legacy ASCII structured points with one VECTORS attribute `U` and one
/// SCALARS attribute `residual`.
void write_vtk(const VectorField3D& U, const ScalarField3D& residual, const std::string& path);

/// CSV slice `x1,x2,x3,U1,U2,U3` through the mid x2 plane.
void write_slice_csv(const VectorField3D& U, const std::string& path);

std::string format_g17(double x);

}  // namespace curlcurl

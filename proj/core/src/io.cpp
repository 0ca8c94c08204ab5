// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace curlcurl {

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void write_field_csv(const CylField& u, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const Grid& g = u.grid();
    out << "r,z,value\n";
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j)
            out << format_g17(g.r[i]) << ',' << format_g17(g.z[j]) << ','
                << format_g17(u(i, j)) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path);
}

CylField read_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field CSV: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty field CSV: " + path);
    if (line.rfind("r,z,value", 0) != 0)
        throw std::runtime_error("field CSV must start with header 'r,z,value': " + path);

    std::vector<double> rs, zs, vals;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        double r, z, v;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &r, &z, &v) != 3)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed CSV row");
        if (!std::isfinite(r) || !std::isfinite(z) || !std::isfinite(v))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": non-finite value");
        rs.push_back(r);
        zs.push_back(z);
        vals.push_back(v);
    }
    if (rs.empty()) throw std::runtime_error("field CSV has no data rows: " + path);

    // Row-major over (i,j): the z index varies fastest.
    int nz = 1;
    while (nz < static_cast<int>(rs.size()) && rs[nz] == rs[0]) ++nz;
    if (rs.size() % nz != 0)
        throw std::runtime_error("field CSV is not a full tensor grid: " + path);
    const int nr = static_cast<int>(rs.size()) / nz;
    const double rmax = rs.back();
    const double zmax = zs.back();
    if (nr < 3 || nz < 3 || nz % 2 == 0)
        throw std::runtime_error("field CSV grid is not a valid solver grid: " + path);

    GridPtr grid = make_grid(rmax, zmax, nr, nz);
    const double tol_r = 1e-9 * (1.0 + rmax), tol_z = 1e-9 * (1.0 + zmax);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nz; ++j) {
            const size_t k = static_cast<size_t>(i) * nz + j;
            if (std::fabs(rs[k] - grid->r[i]) > tol_r || std::fabs(zs[k] - grid->z[j]) > tol_z)
                throw std::runtime_error("field CSV nodes are not a uniform grid: " + path);
        }
    return CylField(grid, std::move(vals));
}

void write_trace_csv(const std::vector<TraceRow>& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "iter,J,residual,t\n";
    for (const auto& row : trace)
        out << row.iter << ',' << format_g17(row.J) << ',' << format_g17(row.residual) << ','
            << format_g17(row.t) << '\n';
}

void write_vtk(const VectorField3D& U, const ScalarField3D& residual, const std::string& path) {
    if (residual.n != U.n) throw std::invalid_argument("write_vtk: mismatched 3D grids");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    const int n = U.n;
    out << "# vtk DataFile Version 3.0\n";
    out << "curlcurl reconstructed field\n";
    out << "ASCII\n";
    out << "DATASET STRUCTURED_POINTS\n";
    out << "DIMENSIONS " << n << ' ' << n << ' ' << n << '\n';
    out << "ORIGIN " << format_g17(-U.L) << ' ' << format_g17(-U.L) << ' ' << format_g17(-U.L)
        << '\n';
    out << "SPACING " << format_g17(U.h) << ' ' << format_g17(U.h) << ' ' << format_g17(U.h)
        << '\n';
    out << "POINT_DATA " << static_cast<long long>(n) * n * n << '\n';
    out << "VECTORS U double\n";
    // VTK structured points iterate x fastest.
    for (int c = 0; c < n; ++c)
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) {
                const int k = U.index(a, b, c);
                out << format_g17(U.u1[k]) << ' ' << format_g17(U.u2[k]) << ' '
                    << format_g17(U.u3[k]) << '\n';
            }
    out << "SCALARS residual double 1\n";
    out << "LOOKUP_TABLE default\n";
    for (int c = 0; c < n; ++c)
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a) out << format_g17(residual.v[residual.index(a, b, c)]) << '\n';
}

void write_slice_csv(const VectorField3D& U, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "x1,x2,x3,U1,U2,U3\n";
    const int b = (U.n - 1) / 2;
    const double x2 = U.coord(b);
    for (int a = 0; a < U.n; ++a)
        for (int c = 0; c < U.n; ++c) {
            const int k = U.index(a, b, c);
            out << format_g17(U.coord(a)) << ',' << format_g17(x2) << ',' << format_g17(U.coord(c))
                << ',' << format_g17(U.u1[k]) << ',' << format_g17(U.u2[k]) << ','
                << format_g17(U.u3[k]) << '\n';
        }
}

}  // namespace curlcurl

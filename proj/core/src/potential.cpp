// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/potential.hpp"

#include <cmath>

#include "curlcurl/symmetry.hpp"

namespace curlcurl {

Potential Potential::constant(double c) {
    Potential out;
    out.c_ = Coefficient::constant(c);
    return out;
}

Potential Potential::from_field(CylField field) {
    Potential out;
    out.c_ = Coefficient::from_field(std::move(field));
    return out;
}

bool is_reversed_steiner(const Potential& V, const Grid& grid, double tol) {
    if (V.coeff().is_constant()) return true;
    const double top = V.esssup(grid);
    const CylField& vf = V.coeff().field();
    std::vector<double> row(grid.nz), star(grid.nz);
    for (int i = 0; i < grid.nr; ++i) {
        for (int j = 0; j < grid.nz; ++j) row[j] = top - vf(i, j);
        symmetrize_row(row, star);
        for (int j = 0; j < grid.nz; ++j)
            if (std::fabs(star[j] - row[j]) > tol) return false;
    }
    return true;
}

}  // namespace curlcurl

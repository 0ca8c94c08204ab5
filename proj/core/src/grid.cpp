// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace curlcurl {

namespace {

// Exact integrals of the two P1 shape functions on [a,b] against r^pow dr.
// left gets the weight of the node at a, right the weight of the node at b.
void hat_cell_weights(double a, double b, int pow, double& left, double& right) {
    const double h = b - a;
    const double s1 = (std::pow(b, pow + 1) - std::pow(a, pow + 1)) / (pow + 1);
    const double s2 = (std::pow(b, pow + 2) - std::pow(a, pow + 2)) / (pow + 2);
    left = (b * s1 - s2) / h;
    right = (s2 - a * s1) / h;
}

}  // namespace

bool Grid::same_layout(const Grid& other) const {
    return nr == other.nr && nz == other.nz && rmax == other.rmax && zmax == other.zmax;
}

GridPtr make_grid(double rmax, double zmax, int nr, int nz) {
    if (!(rmax > 0.0) || !(zmax > 0.0))
        throw std::invalid_argument("make_grid: rmax and zmax must be positive");
    if (nr < 3) throw std::invalid_argument("make_grid: nr must be at least 3");
    if (nz < 3) throw std::invalid_argument("make_grid: nz must be at least 3");
    if (nz % 2 == 0)
        throw std::invalid_argument("make_grid: nz must be odd so that z = 0 is a node (got nz=" +
                                    std::to_string(nz) + ")");

    auto g = std::make_shared<Grid>();
    g->rmax = rmax;
    g->zmax = zmax;
    g->nr = nr;
    g->nz = nz;
    g->dr = rmax / (nr - 1);
    g->dz = 2.0 * zmax / (nz - 1);

    g->r.resize(nr);
    for (int i = 0; i < nr; ++i) g->r[i] = i * g->dr;
    g->r[nr - 1] = rmax;

    // z_j = (j - jc)*dz is bit-exactly antisymmetric about the center node.
    g->z.resize(nz);
    const int jc = (nz - 1) / 2;
    for (int j = 0; j < nz; ++j) g->z[j] = (j - jc) * g->dz;

    g->wr3.assign(nr, 0.0);
    g->wr1.assign(nr, 0.0);
    g->mu3.assign(nr - 1, 0.0);
    for (int i = 0; i < nr - 1; ++i) {
        const double a = g->r[i], b = g->r[i + 1];
        double l3, r3, l1, r1;
        hat_cell_weights(a, b, 3, l3, r3);
        hat_cell_weights(a, b, 1, l1, r1);
        g->wr3[i] += l3;
        g->wr3[i + 1] += r3;
        g->wr1[i] += l1;
        g->wr1[i + 1] += r1;
        g->mu3[i] = (b * b * b * b - a * a * a * a) / 4.0;
    }

    g->cz.assign(nz, g->dz);
    g->cz[0] = 0.5 * g->dz;
    g->cz[nz - 1] = 0.5 * g->dz;

    return g;
}

}  // namespace curlcurl

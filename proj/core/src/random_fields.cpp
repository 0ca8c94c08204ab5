// SPDX-License-Identifier: Apache-2.0
#include "curlcurl/random_fields.hpp"

#include <cmath>
#include <vector>

namespace curlcurl {

namespace {

// Quintic smoothstep: C^2, 0 below 0, 1 above 1.
inline double smooth01(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}

}  // namespace

CylField random_bump_field(const GridPtr& grid, std::mt19937_64& rng,
                           const RandomFieldOptions& opts) {
    const Grid& g = *grid;
    const int nb = opts.min_bumps +
                   static_cast<int>(uniform01(rng) * (opts.max_bumps - opts.min_bumps + 1));
    struct Bump {
        double A, beta, a, b, z0;
    };
    std::vector<Bump> bumps(nb);
    const double sr = g.rmax / 6.0, sz = g.zmax / 6.0;
    for (auto& bp : bumps) {
        const double wr = uniform(rng, 0.5 * sr, 1.5 * sr);
        const double wz = uniform(rng, 0.5 * sz, 1.5 * sz);
        bp.A = uniform(rng, 0.3, 1.0);
        if (!opts.nonnegative && uniform01(rng) < 0.5) bp.A = -bp.A;
        bp.beta = uniform(rng, 0.0, 2.0 / (g.rmax * g.rmax));
        bp.a = 1.0 / (wr * wr);
        bp.b = 1.0 / (wz * wz);
        bp.z0 = uniform(rng, -0.45 * g.zmax, 0.45 * g.zmax);
    }

    const double r0 = opts.taper_start * g.rmax, r1 = opts.taper_end * g.rmax;
    const double z0w = opts.taper_start * g.zmax, z1w = opts.taper_end * g.zmax;
    CylField u(grid);
    for (int i = 0; i < g.nr; ++i) {
        const double r = g.r[i];
        const double wubr = smooth01((r1 - r) / (r1 - r0));
        for (int j = 0; j < g.nz; ++j) {
            const double z = g.z[j];
            const double w = wubr * smooth01((z1w - std::fabs(z)) / (z1w - z0w));
            if (w == 0.0) continue;
            double acc = 0.0;
            for (const auto& bp : bumps) {
                const double dzb = z - bp.z0;
                acc += bp.A * (1.0 + bp.beta * r * r) *
                       std::exp(-bp.a * r * r - bp.b * dzb * dzb);
            }
            u(i, j) = w * acc;
        }
    }
    return u;
}

}  // namespace curlcurl

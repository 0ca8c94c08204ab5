// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

#include "curlcurl/field.hpp"

namespace curlcurl {

/// Deterministic uniform draw in [0,1); std::uniform_real_distribution is
/// implementation-defined, which would break bit-reproducible runs.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * uniform01(rng);
}

struct RandomFieldOptions {
    int min_bumps = 2;
    int max_bumps = 5;
    bool nonnegative = false;
    /// Fields are exactly zero for r >= taper_end*rmax or |z| >= taper_end*zmax.
    double taper_start = 0.78;
    double taper_end = 0.90;
};

/// Sum of separable axis-regular bumps
///   A (1 + beta r^2) exp(-a r^2 - b (z - z0)^2)
/// times a quintic window that vanishes identically in the outer margin.
/// Smooth, compactly supported, and even in r (all odd r-derivatives vanish
/// on the axis), matching the function space the solver works in.
CylField random_bump_field(const GridPtr& grid, std::mt19937_64& rng,
                           const RandomFieldOptions& opts = {});

}  // namespace curlcurl

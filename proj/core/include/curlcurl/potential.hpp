// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "curlcurl/field.hpp"
#include "curlcurl/nonlinearity.hpp"

namespace curlcurl {

/// Bounded potential V(r,z) sampled on a grid (or constant).
class Potential {
public:
    Potential() = default;
    static Potential constant(double c);
    static Potential from_field(CylField field);

    const Coefficient& coeff() const { return c_; }
    double at_node(const Grid& g, int i, int j) const { return c_.at_node(g, i, j); }
    double at(double r, double z) const { return c_.at(r, z); }

    /// esssup estimate: max over nodes (the constant itself for constants).
    double esssup(const Grid& g) const { return c_.max_value(g); }
    double essinf(const Grid& g) const { return c_.min_value(g); }

private:
    Coefficient c_;
};

/// True iff every z-row of esssup(V) - V equals its own symmetric-decreasing
/// rearrangement within tol (reversed Steiner symmetry).
bool is_reversed_steiner(const Potential& V, const Grid& grid, double tol);

}  // namespace curlcurl

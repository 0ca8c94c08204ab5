// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "curlcurl/field.hpp"

namespace curlcurl {

/// Spatial coefficient that is either a constant or a nodal field with
/// bilinear off-node evaluation. Shared by Gamma weights and potentials.
class Coefficient {
public:
    Coefficient() : constant_(true), value_(1.0) {}
    static Coefficient constant(double c);
    static Coefficient from_field(CylField field);

    bool is_constant() const { return constant_; }
    double constant_value() const { return value_; }
    const CylField& field() const { return field_; }

    double at_node(const Grid&, int i, int j) const {
        return constant_ ? value_ : field_(i, j);
    }
    /// Bilinear evaluation at an arbitrary point; clamped to the grid box.
    double at(double r, double z) const;

    double max_value(const Grid& g) const;
    double min_value(const Grid& g) const;

private:
    bool constant_;
    double value_ = 1.0;
    CylField field_;
};

enum class NonlinearityKind { Power, Log, Custom };

/// Evaluation contract for f(r,z,s) >= 0 and its primitive
/// F(r,z,s) = int_0^s f(r,z,t) dt.
///
/// Built-in kinds:
///   power: f = Gamma(r,z) * s^((p-1)/2), matching f(x,|U|^2)U = Gamma|U|^(p-1)U
///   log:   f = Gamma(r,z) * log(1+s), with F in closed form
class Nonlinearity {
public:
    static Nonlinearity power(double p, Coefficient gamma = Coefficient::constant(1.0));
    static Nonlinearity logarithmic(Coefficient gamma = Coefficient::constant(1.0), double p = 2.0);
    static Nonlinearity custom(std::function<double(double, double, double)> f,
                               std::function<double(double, double, double)> F, double p);

    NonlinearityKind kind() const { return kind_; }
    double growth_exponent() const { return p_; }
    const Coefficient& gamma() const { return gamma_; }

    double f(double r, double z, double s) const;
    double F(double r, double z, double s) const;

    // Node-indexed fast paths (Gamma looked up, not interpolated).
    double f_node(const Grid& g, int i, int j, double s) const;
    double F_node(const Grid& g, int i, int j, double s) const;

private:
    NonlinearityKind kind_ = NonlinearityKind::Power;
    double p_ = 3.0;
    Coefficient gamma_;
    std::function<double(double, double, double)> custom_f_, custom_F_;

    double shape_f(double s) const;
    double shape_F(double s) const;
};

/// One entry per hypothesis on f, with a witness for failures. The solver's
/// variational setup needs, in this order:
///   (i)   0 <= f(r,z,s) <= c (1 + s^((p-1)/2)) for some c, p in (1,5)
///   (ii)  f(r,z,s) -> 0 as s -> 0, uniformly in (r,z)
///   (iii) s -> f(r,z,s) strictly increasing
///   (iv)  F(r,z,s)/s -> infinity as s -> infinity
///   (v)   z -> f(r,z,(s+sig)^2)(s+sig)^2 - f(r,z,s^2)s^2 symmetric
///         nonincreasing for all r, s >= 0, sig > 0
struct NonlinearityValidation {
    bool growth_bound = false;          // (i), with c estimated from the samples
    bool vanishes_at_zero = false;      // (ii)
    bool strictly_increasing = false;   // (iii)
    bool superlinear_primitive = false; // (iv)
    bool z_monotone_increments = false; // (v)
    double c_estimate = 0.0;
    std::string detail;  // first failure witness, empty when all pass
    bool all() const {
        return growth_bound && vanishes_at_zero && strictly_increasing && superlinear_primitive &&
               z_monotone_increments;
    }
};

/// Samples f over the grid nodes and the given strictly increasing s-ladder
/// and checks hypotheses (i)-(v) above. Failures are report entries, not
/// errors.
NonlinearityValidation validate_nonlinearity(const Nonlinearity& f, const Grid& grid,
                                             const std::vector<double>& s_ladder);

/// Default ladder: log-spaced from 1e-12 to 1e12.
std::vector<double> default_s_ladder();

}  // namespace curlcurl

#pragma once

// Set-level operations over orbicular sets sharing one element domain:
// inclusion, equality, complement, generalized union/intersection with a
// pluggable radius operator, and arithmetic/geometric means.

#include "orbicular/core.hpp"

namespace orbicular {

enum class RadiusOperator {
    Min,
    Max,
    Product,         // r1 r2
    Sum,             // (r1^o + r2^o - (r1 r2)^o)^(1/o)
    ArithmeticMean,  // ((r1^o + r2^o) / 2)^(1/o)
    GeometricMean,   // (r1^o r2^o)^(1/(2o)) = sqrt(r1 r2)
};

/// Combines two radii in [0, 1]; the result stays in [0, 1].
double radius_combine(RadiusOperator op, double r1, double r2, double o);

/// Elementwise r_A <= r_B, mu_A <= mu_B, xi_A <= xi_B, nu_A >= nu_B.
/// Throws DomainMismatch unless both sets cover the same elements.
bool is_subset(const OrbicularSet& a, const OrbicularSet& b);

/// Elementwise equality of all grades and radii, within `tol`.
bool sets_equal(const OrbicularSet& a, const OrbicularSet& b, double tol = 0.0);

OrbicularSet set_complement(const OrbicularSet& a);

/// (max mu, min xi, min nu; op(r1, r2)) per element.
OrbicularSet set_union(const OrbicularSet& a, const OrbicularSet& b, RadiusOperator op);

/// (min mu, min xi, max nu; op(r1, r2)) per element. Indeterminacy takes the
/// minimum in both union and intersection.
OrbicularSet set_intersection(const OrbicularSet& a, const OrbicularSet& b, RadiusOperator op);

/// Per-grade power mean ((x_A^q + x_B^q) / 2)^(1/q) with q the grade's exponent.
OrbicularSet arithmetic_mean_set(const OrbicularSet& a, const OrbicularSet& b,
                                 RadiusOperator op);

/// Per-grade geometric mean sqrt(x_A x_B).
OrbicularSet geometric_mean_set(const OrbicularSet& a, const OrbicularSet& b,
                                RadiusOperator op);

}  // namespace orbicular

#pragma once

// Algebraic operations on single orbicular values: complement, lattice
// meet/join, algebraic sum and product, scalar multiple and power. Sum,
// product, scalar multiple and power come in two radius variants.

#include "orbicular/core.hpp"

namespace orbicular {

/// Radius policy for the binary and scalar operations.
enum class RadiusMode { Min, Max };

/// Swaps membership and non-membership; indeterminacy and radius are kept.
/// Throws ConstraintViolation when m != n and the swapped triple no longer
/// satisfies the power constraint.
OrbicularValue complement(const OrbicularValue& v);

/// (min mu, max xi, max nu; min r)
OrbicularValue meet(const OrbicularValue& a, const OrbicularValue& b);
/// (max mu, min xi, min nu; max r)
OrbicularValue join(const OrbicularValue& a, const OrbicularValue& b);

/// mu = (mu1^m + mu2^m - mu1^m mu2^m)^(1/m), xi = xi1 xi2, nu = nu1 nu2.
OrbicularValue add(const OrbicularValue& a, const OrbicularValue& b, RadiusMode mode);

/// Dual of add: mu = mu1 mu2, xi = xi1 xi2, nu = (nu1^n + nu2^n - nu1^n nu2^n)^(1/n).
OrbicularValue mul(const OrbicularValue& a, const OrbicularValue& b, RadiusMode mode);

/// lambda * v for lambda in [0, 1]. Radius is r^lambda under Min and
/// (1 - (1 - r^o)^lambda)^(1/o) under Max.
OrbicularValue scale(double lambda, const OrbicularValue& v, RadiusMode mode);

/// v ^ lambda for lambda in [0, 1]; dual of scale on mu/nu, same radius rule.
OrbicularValue power(const OrbicularValue& v, double lambda, RadiusMode mode);

}  // namespace orbicular

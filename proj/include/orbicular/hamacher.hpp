#pragma once

// Hamacher t-norm / t-conorm and the operations and weighted aggregation
// operators built from them.
//
// Every grade is aggregated in powered form (mu^m, xi^o, nu^n, r^o) and the
// matching root is taken afterwards. The additive family (h_add, h_scale,
// hwa) applies the t-conorm to membership and radius and the t-norm to
// indeterminacy and non-membership; the multiplicative family (h_mul,
// h_power, hwg) swaps the two.
//
// zeta = 1 recovers the algebraic product/sum and zeta = 2 the Einstein pair.

#include <span>
#include <vector>

#include "orbicular/core.hpp"

namespace orbicular {

class HamacherParam {
public:
    double zeta() const noexcept { return zeta_; }

private:
    friend HamacherParam make_zeta(double zeta);
    explicit HamacherParam(double z) : zeta_(z) {}
    double zeta_;
};

/// Throws InvalidZeta unless zeta > 0 and finite.
HamacherParam make_zeta(double zeta);

/// The zeta grid 1.5, 2, ..., 6 used for sensitivity sweeps.
std::vector<HamacherParam> default_zeta_grid();

class WeightVector {
public:
    std::span<const double> values() const noexcept { return weights_; }
    std::size_t size() const noexcept { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_.at(i); }

private:
    friend WeightVector make_weights(std::vector<double> w);
    explicit WeightVector(std::vector<double> w) : weights_(std::move(w)) {}
    std::vector<double> weights_;
};

/// Throws InvalidWeights unless non-empty, every weight > 0, and the sum is
/// 1 within 1e-9. No renormalization.
WeightVector make_weights(std::vector<double> w);

/// d e / (zeta + (1 - zeta)(d + e - d e))
double hamacher_tnorm(double d, double e, HamacherParam zeta);

/// (d + e - d e - (1 - zeta) d e) / (1 - (1 - zeta) d e)
double hamacher_tconorm(double d, double e, HamacherParam zeta);

OrbicularValue h_add(const OrbicularValue& a, const OrbicularValue& b, HamacherParam zeta);
OrbicularValue h_mul(const OrbicularValue& a, const OrbicularValue& b, HamacherParam zeta);

/// delta * v, delta in [0, 1]. Throws DeltaOutOfRange.
OrbicularValue h_scale(double delta, const OrbicularValue& v, HamacherParam zeta);
/// v ^ delta, delta in [0, 1]. Throws DeltaOutOfRange.
OrbicularValue h_power(const OrbicularValue& v, double delta, HamacherParam zeta);

/// Weighted averaging operator, evaluated in closed form. Equals the
/// h_add-fold of h_scale(w_i, v_i). Throws LengthMismatch, ParamMismatch,
/// EmptyInput.
OrbicularValue hwa(std::span<const OrbicularValue> values, const WeightVector& w,
                   HamacherParam zeta);

/// Weighted geometric operator, evaluated in closed form. Equals the
/// h_mul-fold of h_power(v_i, w_i).
OrbicularValue hwg(std::span<const OrbicularValue> values, const WeightVector& w,
                   HamacherParam zeta);

}  // namespace orbicular

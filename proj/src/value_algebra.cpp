#include "orbicular/value_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace orbicular {

namespace {

double probabilistic_sum_root(double a, double b, double q) {
    const double aq = unit_pow(a, q);
    const double bq = unit_pow(b, q);
    return unit_pow(aq + bq - aq * bq, 1.0 / q);
}

double pick_radius(double r1, double r2, RadiusMode mode) {
    return mode == RadiusMode::Min ? std::min(r1, r2) : std::max(r1, r2);
}

void check_lambda(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        std::ostringstream os;
        os << "lambda = " << lambda << " outside [0, 1]";
        throw Error(ErrorCode::LambdaOutOfRange, os.str());
    }
}

// (1 - (1 - x^q)^lambda)^(1/q)
double scaled_grade(double x, double q, double lambda) {
    const double xq = unit_pow(x, q);
    if (xq >= 1.0) return lambda > 0.0 ? 1.0 : 0.0;
    return unit_pow(-std::expm1(lambda * std::log1p(-xq)), 1.0 / q);
}

double scaled_radius(double r, double o, double lambda, RadiusMode mode) {
    if (mode == RadiusMode::Min) return std::pow(r, lambda);
    return scaled_grade(r, o, lambda);
}

}  // namespace

OrbicularValue complement(const OrbicularValue& v) {
    auto c = ValueAccess::make(v.params(), {v.nu(), v.xi(), v.mu()}, v.r());
    if (v.feasible() && !c.feasible()) {
        std::ostringstream os;
        os << "complement of (" << v.mu() << ", " << v.xi() << ", " << v.nu()
           << ") has power sum " << 1.0 - constraint_slack(c) << " under "
           << describe(v.params());
        throw Error(ErrorCode::ConstraintViolation, os.str());
    }
    return c;
}

OrbicularValue meet(const OrbicularValue& a, const OrbicularValue& b) {
    require_same_params(a, b);
    return ValueAccess::make(a.params(),
                             {std::min(a.mu(), b.mu()), std::max(a.xi(), b.xi()),
                              std::max(a.nu(), b.nu())},
                             std::min(a.r(), b.r()));
}

OrbicularValue join(const OrbicularValue& a, const OrbicularValue& b) {
    require_same_params(a, b);
    return ValueAccess::make(a.params(),
                             {std::max(a.mu(), b.mu()), std::min(a.xi(), b.xi()),
                              std::min(a.nu(), b.nu())},
                             std::max(a.r(), b.r()));
}

OrbicularValue add(const OrbicularValue& a, const OrbicularValue& b, RadiusMode mode) {
    require_same_params(a, b);
    const auto& p = a.params();
    return ValueAccess::make(
        p, {probabilistic_sum_root(a.mu(), b.mu(), p.m()), a.xi() * b.xi(), a.nu() * b.nu()},
        pick_radius(a.r(), b.r(), mode));
}

OrbicularValue mul(const OrbicularValue& a, const OrbicularValue& b, RadiusMode mode) {
    require_same_params(a, b);
    const auto& p = a.params();
    return ValueAccess::make(
        p, {a.mu() * b.mu(), a.xi() * b.xi(), probabilistic_sum_root(a.nu(), b.nu(), p.n())},
        pick_radius(a.r(), b.r(), mode));
}

OrbicularValue scale(double lambda, const OrbicularValue& v, RadiusMode mode) {
    check_lambda(lambda);
    const auto& p = v.params();
    return ValueAccess::make(p,
                             {scaled_grade(v.mu(), p.m(), lambda), std::pow(v.xi(), lambda),
                              std::pow(v.nu(), lambda)},
                             scaled_radius(v.r(), p.o(), lambda, mode));
}

OrbicularValue power(const OrbicularValue& v, double lambda, RadiusMode mode) {
    check_lambda(lambda);
    const auto& p = v.params();
    return ValueAccess::make(p,
                             {std::pow(v.mu(), lambda), std::pow(v.xi(), lambda),
                              scaled_grade(v.nu(), p.n(), lambda)},
                             scaled_radius(v.r(), p.o(), lambda, mode));
}

}  // namespace orbicular

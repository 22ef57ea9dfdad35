#include "orbicular/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace orbicular {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveExponent: return "NonPositiveExponent";
        case ErrorCode::NotIntegerOrReciprocal: return "NotIntegerOrReciprocal";
        case ErrorCode::LcmViolation: return "LcmViolation";
        case ErrorCode::GradeOutOfRange: return "GradeOutOfRange";
        case ErrorCode::RadiusOutOfRange: return "RadiusOutOfRange";
        case ErrorCode::ConstraintViolation: return "ConstraintViolation";
        case ErrorCode::ParamMismatch: return "ParamMismatch";
        case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
        case ErrorCode::DeltaOutOfRange: return "DeltaOutOfRange";
        case ErrorCode::DomainMismatch: return "DomainMismatch";
        case ErrorCode::UnknownElement: return "UnknownElement";
        case ErrorCode::DuplicateElement: return "DuplicateElement";
        case ErrorCode::EmptyUniverse: return "EmptyUniverse";
        case ErrorCode::EmptyPanel: return "EmptyPanel";
        case ErrorCode::CenterMismatch: return "CenterMismatch";
        case ErrorCode::RaggedMatrix: return "RaggedMatrix";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidWeights: return "InvalidWeights";
        case ErrorCode::InvalidZeta: return "InvalidZeta";
        case ErrorCode::InvalidEta: return "InvalidEta";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

namespace {

bool near_integer(double x, long long& out) {
    const double r = std::round(x);
    if (r < 1.0 || std::abs(x - r) > kTolerance) return false;
    out = static_cast<long long>(r);
    return true;
}

enum class ExponentKind { Integer, Reciprocal };

ExponentKind classify(const char* name, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        std::ostringstream os;
        os << name << " = " << x << " must be positive";
        throw Error(ErrorCode::NonPositiveExponent, os.str());
    }
    long long t = 0;
    if (near_integer(x, t)) return ExponentKind::Integer;
    const double inv = 1.0 / x;
    const double r = std::round(inv);
    if (r >= 1.0 && std::abs(inv - r) <= kTolerance * std::max(1.0, r)) {
        return ExponentKind::Reciprocal;
    }
    std::ostringstream os;
    os << name << " = " << x << " is neither a positive integer nor 1/t";
    throw Error(ErrorCode::NotIntegerOrReciprocal, os.str());
}

}  // namespace

ParameterTriple make_params(double m, double n, double o) {
    const auto km = classify("m", m);
    const auto kn = classify("n", n);
    classify("o", o);

    if (km == ExponentKind::Integer && kn == ExponentKind::Integer) {
        const auto mi = static_cast<long long>(std::round(m));
        const auto ni = static_cast<long long>(std::round(n));
        const auto l = std::lcm(mi, ni);
        if (std::abs(o - static_cast<double>(l)) > kTolerance) {
            std::ostringstream os;
            os << "o = " << o << " but LCM(" << mi << ", " << ni << ") = " << l;
            throw Error(ErrorCode::LcmViolation, os.str());
        }
        return ParameterTriple(m, n, o, true);
    }
    return ParameterTriple(m, n, o, false);
}

std::string describe(const ParameterTriple& p) {
    std::ostringstream os;
    os << "(m=" << p.m() << ", n=" << p.n() << ", o=" << p.o() << ")";
    return os.str();
}

double unit_pow(double x, double q) {
    if (x <= 0.0) return 0.0;
    if (q == 1.0) return x;
    if (q == 2.0) return x * x;
    return std::pow(x, q);
}

double power_sum(const ParameterTriple& p, const MembershipTriple& g) {
    return unit_pow(g.mu, p.m()) + unit_pow(g.xi, p.o()) + unit_pow(g.nu, p.n());
}

namespace {

void check_grade(const char* name, double x) {
    if (!(x >= -kTolerance && x <= 1.0 + kTolerance)) {
        std::ostringstream os;
        os << name << " = " << x << " outside [0, 1]";
        throw Error(ErrorCode::GradeOutOfRange, os.str());
    }
}

void check_radius(double r) {
    if (!(r >= -kTolerance && r <= 1.0 + kTolerance)) {
        std::ostringstream os;
        os << "radius = " << r << " outside [0, 1]";
        throw Error(ErrorCode::RadiusOutOfRange, os.str());
    }
}

std::string violation_message(const ParameterTriple& p, const MembershipTriple& g, double s) {
    std::ostringstream os;
    os.precision(6);
    os << "power sum " << s << " > 1 for grades (" << g.mu << ", " << g.xi << ", " << g.nu
       << ") under " << describe(p);
    return os.str();
}

}  // namespace

OrbicularValue validate_value(const ParameterTriple& p, double mu, double xi, double nu,
                              double r, ConstraintPolicy policy) {
    check_grade("mu", mu);
    check_grade("xi", xi);
    check_grade("nu", nu);
    check_radius(r);
    const MembershipTriple g{mu, xi, nu};
    const double s = power_sum(p, g);
    const bool feasible = s <= 1.0 + kTolerance;
    if (!feasible && policy == ConstraintPolicy::Enforce) {
        throw Error(ErrorCode::ConstraintViolation, violation_message(p, g, s));
    }
    return OrbicularValue(p, g, r, feasible);
}

OrbicularValue ValueAccess::make(const ParameterTriple& p, MembershipTriple g, double r) {
    return validate_value(p, g, r, ConstraintPolicy::Report);
}

double constraint_slack(const OrbicularValue& v) {
    return 1.0 - power_sum(v.params(), v.grades());
}

void require_same_params(const OrbicularValue& a, const OrbicularValue& b) {
    if (!(a.params() == b.params())) {
        throw Error(ErrorCode::ParamMismatch,
                    describe(a.params()) + " vs " + describe(b.params()));
    }
}

void OrbicularSet::insert(std::string id, const OrbicularValue& v) {
    if (!(v.params() == params_)) {
        throw Error(ErrorCode::ParamMismatch, "element '" + id + "' has parameters " +
                                                  describe(v.params()) + ", set has " +
                                                  describe(params_));
    }
    if (contains(id)) {
        throw Error(ErrorCode::DuplicateElement, "element '" + id + "' already present");
    }
    entries_.emplace_back(std::move(id), v);
}

bool OrbicularSet::contains(std::string_view id) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return e.first == id; });
}

const OrbicularValue& OrbicularSet::at(std::string_view id) const {
    for (const auto& e : entries_) {
        if (e.first == id) return e.second;
    }
    throw Error(ErrorCode::UnknownElement, "no element '" + std::string(id) + "'");
}

}  // namespace orbicular

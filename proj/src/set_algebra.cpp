#include "orbicular/set_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "orbicular/value_algebra.hpp"

namespace orbicular {

double radius_combine(RadiusOperator op, double r1, double r2, double o) {
    switch (op) {
        case RadiusOperator::Min: return std::min(r1, r2);
        case RadiusOperator::Max: return std::max(r1, r2);
        case RadiusOperator::Product: return r1 * r2;
        case RadiusOperator::Sum: {
            const double a = unit_pow(r1, o);
            const double b = unit_pow(r2, o);
            return unit_pow(a + b - a * b, 1.0 / o);
        }
        case RadiusOperator::ArithmeticMean:
            return unit_pow((unit_pow(r1, o) + unit_pow(r2, o)) / 2.0, 1.0 / o);
        case RadiusOperator::GeometricMean:
            return unit_pow(unit_pow(r1, o) * unit_pow(r2, o), 1.0 / (2.0 * o));
    }
    return 0.0;
}

namespace {

void require_same_domain(const OrbicularSet& a, const OrbicularSet& b) {
    if (!(a.params() == b.params())) {
        throw Error(ErrorCode::ParamMismatch,
                    describe(a.params()) + " vs " + describe(b.params()));
    }
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DomainMismatch, "sets have different numbers of elements");
    }
    for (const auto& [id, v] : a) {
        if (!b.contains(id)) {
            throw Error(ErrorCode::DomainMismatch, "element '" + id + "' missing from one set");
        }
    }
}

using ElementOp = std::function<OrbicularValue(const OrbicularValue&, const OrbicularValue&)>;

OrbicularSet zip_with(const OrbicularSet& a, const OrbicularSet& b, const ElementOp& f) {
    require_same_domain(a, b);
    OrbicularSet out(a.params());
    for (const auto& [id, va] : a) out.insert(id, f(va, b.at(id)));
    return out;
}

double power_mean2(double x, double y, double q) {
    return unit_pow((unit_pow(x, q) + unit_pow(y, q)) / 2.0, 1.0 / q);
}

}  // namespace

bool is_subset(const OrbicularSet& a, const OrbicularSet& b) {
    require_same_domain(a, b);
    return std::all_of(a.begin(), a.end(), [&](const OrbicularSet::Entry& e) {
        const auto& x = e.second;
        const auto& y = b.at(e.first);
        return x.r() <= y.r() && x.mu() <= y.mu() && x.xi() <= y.xi() && x.nu() >= y.nu();
    });
}

bool sets_equal(const OrbicularSet& a, const OrbicularSet& b, double tol) {
    require_same_domain(a, b);
    auto close = [tol](double x, double y) { return std::abs(x - y) <= tol; };
    return std::all_of(a.begin(), a.end(), [&](const OrbicularSet::Entry& e) {
        const auto& x = e.second;
        const auto& y = b.at(e.first);
        return close(x.r(), y.r()) && close(x.mu(), y.mu()) && close(x.xi(), y.xi()) &&
               close(x.nu(), y.nu());
    });
}

OrbicularSet set_complement(const OrbicularSet& a) {
    OrbicularSet out(a.params());
    for (const auto& [id, v] : a) out.insert(id, complement(v));
    return out;
}

OrbicularSet set_union(const OrbicularSet& a, const OrbicularSet& b, RadiusOperator op) {
    return zip_with(a, b, [op](const OrbicularValue& x, const OrbicularValue& y) {
        return ValueAccess::make(
            x.params(),
            {std::max(x.mu(), y.mu()), std::min(x.xi(), y.xi()), std::min(x.nu(), y.nu())},
            radius_combine(op, x.r(), y.r(), x.params().o()));
    });
}

OrbicularSet set_intersection(const OrbicularSet& a, const OrbicularSet& b, RadiusOperator op) {
    return zip_with(a, b, [op](const OrbicularValue& x, const OrbicularValue& y) {
        return ValueAccess::make(
            x.params(),
            {std::min(x.mu(), y.mu()), std::min(x.xi(), y.xi()), std::max(x.nu(), y.nu())},
            radius_combine(op, x.r(), y.r(), x.params().o()));
    });
}

OrbicularSet arithmetic_mean_set(const OrbicularSet& a, const OrbicularSet& b,
                                 RadiusOperator op) {
    return zip_with(a, b, [op](const OrbicularValue& x, const OrbicularValue& y) {
        const auto& p = x.params();
        return ValueAccess::make(p,
                                 {power_mean2(x.mu(), y.mu(), p.m()),
                                  power_mean2(x.xi(), y.xi(), p.o()),
                                  power_mean2(x.nu(), y.nu(), p.n())},
                                 radius_combine(op, x.r(), y.r(), p.o()));
    });
}

OrbicularSet geometric_mean_set(const OrbicularSet& a, const OrbicularSet& b,
                                RadiusOperator op) {
    return zip_with(a, b, [op](const OrbicularValue& x, const OrbicularValue& y) {
        const auto& p = x.params();
        return ValueAccess::make(p,
                                 {std::sqrt(x.mu() * y.mu()), std::sqrt(x.xi() * y.xi()),
                                  std::sqrt(x.nu() * y.nu())},
                                 radius_combine(op, x.r(), y.r(), p.o()));
    });
}

}  // namespace orbicular

#include "orbicular/distances.hpp"

#include <cmath>

namespace orbicular {

namespace {

struct PoweredDelta {
    double mu;
    double xi;
    double nu;
    double r;
};

PoweredDelta delta(const OrbicularValue& x, const OrbicularValue& y) {
    const auto& p = x.params();
    return {unit_pow(x.mu(), p.m()) - unit_pow(y.mu(), p.m()),
            unit_pow(x.xi(), p.o()) - unit_pow(y.xi(), p.o()),
            unit_pow(x.nu(), p.n()) - unit_pow(y.nu(), p.n()), x.r() - y.r()};
}

PoweredDelta delta_at(const OrbicularSet& a, const OrbicularSet& b, std::string_view id) {
    if (!(a.params() == b.params())) {
        throw Error(ErrorCode::ParamMismatch,
                    describe(a.params()) + " vs " + describe(b.params()));
    }
    return delta(a.at(id), b.at(id));
}

void require_same_domain(const OrbicularSet& a, const OrbicularSet& b) {
    if (!(a.params() == b.params())) {
        throw Error(ErrorCode::ParamMismatch,
                    describe(a.params()) + " vs " + describe(b.params()));
    }
    if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyUniverse, "empty set");
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DomainMismatch, "sets have different numbers of elements");
    }
    for (const auto& e : a) {
        if (!b.contains(e.first)) {
            throw Error(ErrorCode::DomainMismatch, "element '" + e.first + "' missing");
        }
    }
}

double hamming_term(const PoweredDelta& d) {
    return 0.5 * (0.5 * (std::abs(d.mu) + std::abs(d.xi) + std::abs(d.nu)) + std::abs(d.r));
}

}  // namespace

double hamming_point(const OrbicularSet& a, const OrbicularSet& b, std::string_view id) {
    return hamming_term(delta_at(a, b, id));
}

double euclidean_point(const OrbicularSet& a, const OrbicularSet& b, std::string_view id) {
    const auto d = delta_at(a, b, id);
    return 0.5 * (std::sqrt(0.5 * (d.mu * d.mu + d.xi * d.xi + d.nu * d.nu)) + std::abs(d.r));
}

double hamming_norm(const OrbicularSet& a, const OrbicularSet& b) {
    require_same_domain(a, b);
    double sum = 0.0;
    for (const auto& [id, x] : a) sum += hamming_term(delta(x, b.at(id)));
    return sum / static_cast<double>(a.size());
}

double euclidean_norm(const OrbicularSet& a, const OrbicularSet& b) {
    require_same_domain(a, b);
    double squares = 0.0;
    double radii = 0.0;
    for (const auto& [id, x] : a) {
        const auto d = delta(x, b.at(id));
        squares += d.mu * d.mu + d.xi * d.xi + d.nu * d.nu;
        radii += std::abs(d.r);
    }
    const auto l = static_cast<double>(a.size());
    return 0.5 * (std::sqrt(squares / (2.0 * l)) + radii / l);
}

}  // namespace orbicular

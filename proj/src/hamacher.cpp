#include "orbicular/hamacher.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace orbicular {

HamacherParam make_zeta(double zeta) {
    if (!(zeta > 0.0) || !std::isfinite(zeta)) {
        std::ostringstream os;
        os << "zeta = " << zeta << " must be positive and finite";
        throw Error(ErrorCode::InvalidZeta, os.str());
    }
    return HamacherParam(zeta);
}

std::vector<HamacherParam> default_zeta_grid() {
    std::vector<HamacherParam> grid;
    for (int k = 3; k <= 12; ++k) grid.push_back(make_zeta(0.5 * k));
    return grid;
}

WeightVector make_weights(std::vector<double> w) {
    if (w.empty()) throw Error(ErrorCode::InvalidWeights, "no weights");
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!(w[i] > 0.0) || !std::isfinite(w[i])) {
            std::ostringstream os;
            os << "weight " << i << " = " << w[i] << " must be positive";
            throw Error(ErrorCode::InvalidWeights, os.str());
        }
        sum += w[i];
    }
    if (std::abs(sum - 1.0) > kTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "weights sum to " << sum << ", not 1";
        throw Error(ErrorCode::InvalidWeights, os.str());
    }
    return WeightVector(std::move(w));
}

double hamacher_tnorm(double d, double e, HamacherParam zeta) {
    const double z = zeta.zeta();
    const double den = z + (1.0 - z) * (d + e - d * e);
    if (den <= 0.0) return 0.0;  // only at d = e = 0 with zeta -> 0
    return std::clamp(d * e / den, 0.0, 1.0);
}

double hamacher_tconorm(double d, double e, HamacherParam zeta) {
    const double z = zeta.zeta();
    const double de = d * e;
    const double den = 1.0 - (1.0 - z) * de;
    if (den <= 0.0) return 1.0;
    return std::clamp((d + e - de - (1.0 - z) * de) / den, 0.0, 1.0);
}

namespace {

void check_delta(double delta) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        std::ostringstream os;
        os << "delta = " << delta << " outside [0, 1]";
        throw Error(ErrorCode::DeltaOutOfRange, os.str());
    }
}

// Accumulates sum w_i ln(base_i) for a product of powers; a zero base makes
// the whole product zero.
class LogProduct {
public:
    void times_log(double log_base, double weight, bool zero_base) {
        if (zero_base) zero_ = true;
        else if (!zero_) sum_ += weight * log_base;
    }
    bool zero() const { return zero_; }
    double log() const { return sum_; }

private:
    double sum_ = 0.0;
    bool zero_ = false;
};

// Grades are handled in powered form x = g^q.
struct Powered {
    double x;
    double w;
};

// (A - B) / (A + (zeta - 1) B) with A = prod (1 + (zeta - 1) x)^w, B = prod (1 - x)^w,
// evaluated as expm1(d) / (exp(d) + zeta - 1), d = ln A - ln B, so that tiny
// grades do not cancel.
double conorm_quotient(const std::vector<Powered>& terms, double z) {
    LogProduct a;
    LogProduct b;
    for (const auto& t : terms) {
        a.times_log(std::log1p((z - 1.0) * t.x), t.w, false);
        b.times_log(std::log1p(-t.x), t.w, t.x >= 1.0);
    }
    if (b.zero()) return 1.0;
    const double d = a.log() - b.log();
    return std::clamp(std::expm1(d) / (std::exp(d) + z - 1.0), 0.0, 1.0);
}

// zeta B / (A + (zeta - 1) B) with B = prod x^w, A = prod (1 + (zeta - 1)(1 - x))^w,
// evaluated as zeta / (exp(ln A - ln B) + zeta - 1).
double tnorm_quotient(const std::vector<Powered>& terms, double z) {
    LogProduct a;
    LogProduct b;
    for (const auto& t : terms) {
        a.times_log(std::log1p((z - 1.0) * (1.0 - t.x)), t.w, false);
        b.times_log(std::log(t.x), t.w, t.x <= 0.0);
    }
    if (b.zero()) return 0.0;
    return std::clamp(z / (std::exp(a.log() - b.log()) + z - 1.0), 0.0, 1.0);
}

enum class Family { Additive, Multiplicative };

struct Channels {
    std::vector<Powered> mu, xi, nu, r;
};

Channels powered_channels(std::span<const OrbicularValue> values,
                          std::span<const double> weights) {
    const auto& p = values.front().params();
    Channels c;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto& v = values[i];
        require_same_params(values.front(), v);
        c.mu.push_back({unit_pow(v.mu(), p.m()), weights[i]});
        c.xi.push_back({unit_pow(v.xi(), p.o()), weights[i]});
        c.nu.push_back({unit_pow(v.nu(), p.n()), weights[i]});
        c.r.push_back({unit_pow(v.r(), p.o()), weights[i]});
    }
    return c;
}

OrbicularValue combine(std::span<const OrbicularValue> values, std::span<const double> weights,
                       HamacherParam zeta, Family family) {
    const auto& p = values.front().params();
    const double z = zeta.zeta();
    const auto c = powered_channels(values, weights);
    const bool add = family == Family::Additive;
    const double mu = add ? conorm_quotient(c.mu, z) : tnorm_quotient(c.mu, z);
    const double r = add ? conorm_quotient(c.r, z) : tnorm_quotient(c.r, z);
    const double xi = add ? tnorm_quotient(c.xi, z) : conorm_quotient(c.xi, z);
    const double nu = add ? tnorm_quotient(c.nu, z) : conorm_quotient(c.nu, z);
    return ValueAccess::make(
        p, {unit_pow(mu, 1.0 / p.m()), unit_pow(xi, 1.0 / p.o()), unit_pow(nu, 1.0 / p.n())},
        unit_pow(r, 1.0 / p.o()));
}

OrbicularValue aggregate(std::span<const OrbicularValue> values, const WeightVector& w,
                         HamacherParam zeta, Family family) {
    if (values.empty()) throw Error(ErrorCode::EmptyInput, "nothing to aggregate");
    if (values.size() != w.size()) {
        std::ostringstream os;
        os << values.size() << " values but " << w.size() << " weights";
        throw Error(ErrorCode::LengthMismatch, os.str());
    }
    return combine(values, w.values(), zeta, family);
}

using Binary = double (*)(double, double, HamacherParam);

OrbicularValue pairwise(const OrbicularValue& a, const OrbicularValue& b, HamacherParam zeta,
                        Binary on_mu_r, Binary on_xi_nu) {
    require_same_params(a, b);
    const auto& p = a.params();
    const auto lift = [&](Binary op, double x, double y, double q) {
        return unit_pow(op(unit_pow(x, q), unit_pow(y, q), zeta), 1.0 / q);
    };
    return ValueAccess::make(p,
                             {lift(on_mu_r, a.mu(), b.mu(), p.m()),
                              lift(on_xi_nu, a.xi(), b.xi(), p.o()),
                              lift(on_xi_nu, a.nu(), b.nu(), p.n())},
                             lift(on_mu_r, a.r(), b.r(), p.o()));
}

}  // namespace

OrbicularValue h_add(const OrbicularValue& a, const OrbicularValue& b, HamacherParam zeta) {
    return pairwise(a, b, zeta, hamacher_tconorm, hamacher_tnorm);
}

OrbicularValue h_mul(const OrbicularValue& a, const OrbicularValue& b, HamacherParam zeta) {
    return pairwise(a, b, zeta, hamacher_tnorm, hamacher_tconorm);
}

OrbicularValue h_scale(double delta, const OrbicularValue& v, HamacherParam zeta) {
    check_delta(delta);
    const double w[] = {delta};
    return combine(std::span(&v, 1), w, zeta, Family::Additive);
}

OrbicularValue h_power(const OrbicularValue& v, double delta, HamacherParam zeta) {
    check_delta(delta);
    const double w[] = {delta};
    return combine(std::span(&v, 1), w, zeta, Family::Multiplicative);
}

OrbicularValue hwa(std::span<const OrbicularValue> values, const WeightVector& w,
                   HamacherParam zeta) {
    return aggregate(values, w, zeta, Family::Additive);
}

OrbicularValue hwg(std::span<const OrbicularValue> values, const WeightVector& w,
                   HamacherParam zeta) {
    return aggregate(values, w, zeta, Family::Multiplicative);
}

}  // namespace orbicular

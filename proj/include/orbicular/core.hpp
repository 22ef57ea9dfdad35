#pragma once

// Parameter triples, membership grades and orbicular (sphere-valued) fuzzy
// values/sets. Every other module builds on these types.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbicular {

/// Absolute tolerance used for every bound and structure check.
inline constexpr double kTolerance = 1e-9;

enum class ErrorCode {
    NonPositiveExponent,
    NotIntegerOrReciprocal,
    LcmViolation,
    GradeOutOfRange,
    RadiusOutOfRange,
    ConstraintViolation,
    ParamMismatch,
    LambdaOutOfRange,
    DeltaOutOfRange,
    DomainMismatch,
    UnknownElement,
    DuplicateElement,
    EmptyUniverse,
    EmptyPanel,
    CenterMismatch,
    RaggedMatrix,
    EmptyInput,
    LengthMismatch,
    InvalidWeights,
    InvalidZeta,
    InvalidEta,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

/// How a violated power constraint (mu^m + xi^o + nu^n > 1) is treated.
/// Range checks on individual grades and radii always apply.
enum class ConstraintPolicy { Enforce, Report };

/// Exponents (m, n, o): m powers the membership grade, o the indeterminacy
/// grade and n the non-membership grade.
class ParameterTriple {
public:
    double m() const noexcept { return m_; }
    double n() const noexcept { return n_; }
    double o() const noexcept { return o_; }

    /// False when m or n is a reciprocal, where o = LCM(m, n) is undefined
    /// and o was accepted without that check.
    bool lcm_checked() const noexcept { return lcm_checked_; }

    friend bool operator==(const ParameterTriple& a, const ParameterTriple& b) noexcept {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.o_ == b.o_;
    }

private:
    friend ParameterTriple make_params(double m, double n, double o);
    ParameterTriple(double m, double n, double o, bool lcm_checked)
        : m_(m), n_(n), o_(o), lcm_checked_(lcm_checked) {}

    double m_;
    double n_;
    double o_;
    bool lcm_checked_;
};

/// Validates and builds a parameter triple. Each exponent must be a positive
/// integer t or a reciprocal 1/t; for integer m and n, o must equal LCM(m, n).
ParameterTriple make_params(double m, double n, double o);

std::string describe(const ParameterTriple& p);

struct MembershipTriple {
    double mu = 0.0;  // membership
    double xi = 0.0;  // indeterminacy
    double nu = 0.0;  // non-membership

    friend bool operator==(const MembershipTriple&, const MembershipTriple&) = default;
};

/// x^q for x in [0, 1], with 0^q = 0 for every q > 0.
double unit_pow(double x, double q);

/// mu^m + xi^o + nu^n under p.
double power_sum(const ParameterTriple& p, const MembershipTriple& g);

/// A membership triple together with the radius of the sphere around it.
class OrbicularValue {
public:
    const ParameterTriple& params() const noexcept { return params_; }
    const MembershipTriple& grades() const noexcept { return grades_; }
    double mu() const noexcept { return grades_.mu; }
    double xi() const noexcept { return grades_.xi; }
    double nu() const noexcept { return grades_.nu; }
    double r() const noexcept { return r_; }

    /// Whether the power constraint holds (always true for values built
    /// under ConstraintPolicy::Enforce).
    bool feasible() const noexcept { return feasible_; }

    friend bool operator==(const OrbicularValue& a, const OrbicularValue& b) noexcept {
        return a.params_ == b.params_ && a.grades_ == b.grades_ && a.r_ == b.r_;
    }

private:
    friend OrbicularValue validate_value(const ParameterTriple&, double, double, double,
                                         double, ConstraintPolicy);
    friend struct ValueAccess;
    OrbicularValue(const ParameterTriple& p, MembershipTriple g, double r, bool feasible)
        : params_(p), grades_(g), r_(r), feasible_(feasible) {}

    ParameterTriple params_;
    MembershipTriple grades_;
    double r_;
    bool feasible_;
};

/// Checks every invariant and returns the value, or throws GradeOutOfRange,
/// RadiusOutOfRange or (under Enforce) ConstraintViolation.
OrbicularValue validate_value(const ParameterTriple& p, double mu, double xi, double nu,
                              double r,
                              ConstraintPolicy policy = ConstraintPolicy::Enforce);

inline OrbicularValue validate_value(const ParameterTriple& p, const MembershipTriple& g,
                                     double r,
                                     ConstraintPolicy policy = ConstraintPolicy::Enforce) {
    return validate_value(p, g.mu, g.xi, g.nu, r, policy);
}

/// 1 - (mu^m + xi^o + nu^n).
double constraint_slack(const OrbicularValue& v);

/// Throws ParamMismatch unless both values share one parameter triple.
void require_same_params(const OrbicularValue& a, const OrbicularValue& b);

/// Constructor used by operations that compute new values. Ranges are
/// checked with tolerance; the power constraint is only recorded in
/// feasible(), since several operations (scalar multiple, power, meet) are
/// not closed under it.
struct ValueAccess {
    static OrbicularValue make(const ParameterTriple& p, MembershipTriple g, double r);
};

/// Finite, insertion-ordered map from element ids to values that share one
/// parameter triple. Radii may differ per element.
class OrbicularSet {
public:
    using Entry = std::pair<std::string, OrbicularValue>;

    explicit OrbicularSet(const ParameterTriple& p) : params_(p) {}

    const ParameterTriple& params() const noexcept { return params_; }

    /// Throws ParamMismatch or DuplicateElement.
    void insert(std::string id, const OrbicularValue& v);

    bool contains(std::string_view id) const;
    /// Throws UnknownElement.
    const OrbicularValue& at(std::string_view id) const;

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

private:
    ParameterTriple params_;
    std::vector<Entry> entries_;
};

}  // namespace orbicular

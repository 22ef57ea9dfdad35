#pragma once

// Turns a panel of expert ratings into one orbicular value: the per-grade
// power mean is the center, and the radius is the largest distance (in
// powered-grade coordinates) from the center to any rating, capped at 1.

#include <optional>
#include <vector>

#include "orbicular/core.hpp"

namespace orbicular {

class PanelRatings {
public:
    const ParameterTriple& params() const noexcept { return params_; }
    const std::vector<MembershipTriple>& ratings() const noexcept { return ratings_; }
    std::size_t size() const noexcept { return ratings_.size(); }

private:
    friend PanelRatings make_panel(const ParameterTriple&, std::vector<MembershipTriple>,
                                   ConstraintPolicy);
    PanelRatings(const ParameterTriple& p, std::vector<MembershipTriple> r)
        : params_(p), ratings_(std::move(r)) {}

    ParameterTriple params_;
    std::vector<MembershipTriple> ratings_;
};

/// Throws EmptyPanel, GradeOutOfRange, or ConstraintViolation (under Enforce).
PanelRatings make_panel(const ParameterTriple& p, std::vector<MembershipTriple> ratings,
                        ConstraintPolicy policy = ConstraintPolicy::Enforce);

MembershipTriple central_point(const PanelRatings& panel);

/// Throws CenterMismatch unless `center` is the panel's central point.
double enclosing_radius(const PanelRatings& panel, const MembershipTriple& center);
double enclosing_radius(const PanelRatings& panel);

/// (central_point; enclosing_radius). Feasible whenever every rating is.
OrbicularValue form_value(const PanelRatings& panel);

/// Alternatives x criteria matrix of values, row-major.
class DecisionMatrix {
public:
    DecisionMatrix(std::size_t rows, std::size_t cols, std::vector<OrbicularValue> cells);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const OrbicularValue& at(std::size_t row, std::size_t col) const;
    std::vector<OrbicularValue> row(std::size_t r) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<OrbicularValue> cells_;
};

using PanelGrid = std::vector<std::vector<PanelRatings>>;
using RadiusGrid = std::vector<std::vector<double>>;

/// Forms every cell. With `radius_override`, each cell keeps its central point
/// but takes the supplied radius instead of the enclosing radius. Throws
/// RaggedMatrix when rows differ in length, panels differ in expert count,
/// or the override shape does not match.
DecisionMatrix form_decision_matrix(const PanelGrid& panels,
                                    const std::optional<RadiusGrid>& radius_override = {});

/// Combines an already-formed grade matrix with a radius matrix.
DecisionMatrix assemble_decision_matrix(const ParameterTriple& p,
                                        const std::vector<std::vector<MembershipTriple>>& grades,
                                        const RadiusGrid& radii,
                                        ConstraintPolicy policy = ConstraintPolicy::Enforce);

}  // namespace orbicular

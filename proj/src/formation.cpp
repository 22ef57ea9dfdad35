#include "orbicular/formation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace orbicular {

PanelRatings make_panel(const ParameterTriple& p, std::vector<MembershipTriple> ratings,
                        ConstraintPolicy policy) {
    if (ratings.empty()) throw Error(ErrorCode::EmptyPanel, "panel has no ratings");
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        try {
            validate_value(p, ratings[i], 0.0, policy);
        } catch (const Error& e) {
            throw Error(e.code(), "rating " + std::to_string(i) + ": " + e.detail());
        }
    }
    return PanelRatings(p, std::move(ratings));
}

namespace {

double power_mean(const std::vector<MembershipTriple>& rs, double MembershipTriple::*grade,
                  double q) {
    double sum = 0.0;
    for (const auto& r : rs) sum += unit_pow(r.*grade, q);
    return unit_pow(sum / static_cast<double>(rs.size()), 1.0 / q);
}

double distance_to(const ParameterTriple& p, const MembershipTriple& c,
                   const MembershipTriple& x) {
    const double dm = unit_pow(c.mu, p.m()) - unit_pow(x.mu, p.m());
    const double di = unit_pow(c.xi, p.o()) - unit_pow(x.xi, p.o());
    const double dn = unit_pow(c.nu, p.n()) - unit_pow(x.nu, p.n());
    return std::sqrt(dm * dm + di * di + dn * dn);
}

}  // namespace

MembershipTriple central_point(const PanelRatings& panel) {
    const auto& p = panel.params();
    const auto& rs = panel.ratings();
    return {power_mean(rs, &MembershipTriple::mu, p.m()),
            power_mean(rs, &MembershipTriple::xi, p.o()),
            power_mean(rs, &MembershipTriple::nu, p.n())};
}

double enclosing_radius(const PanelRatings& panel, const MembershipTriple& center) {
    const auto expected = central_point(panel);
    if (std::abs(expected.mu - center.mu) > kTolerance ||
        std::abs(expected.xi - center.xi) > kTolerance ||
        std::abs(expected.nu - center.nu) > kTolerance) {
        throw Error(ErrorCode::CenterMismatch, "supplied center is not the panel's central point");
    }
    double farthest = 0.0;
    for (const auto& x : panel.ratings()) {
        farthest = std::max(farthest, distance_to(panel.params(), expected, x));
    }
    return std::min(farthest, 1.0);
}

double enclosing_radius(const PanelRatings& panel) {
    return enclosing_radius(panel, central_point(panel));
}

OrbicularValue form_value(const PanelRatings& panel) {
    const auto center = central_point(panel);
    return ValueAccess::make(panel.params(), center, enclosing_radius(panel, center));
}

DecisionMatrix::DecisionMatrix(std::size_t rows, std::size_t cols,
                               std::vector<OrbicularValue> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (cells_.size() != rows_ * cols_) {
        throw Error(ErrorCode::RaggedMatrix, "cell count does not match rows x cols");
    }
}

const OrbicularValue& DecisionMatrix::at(std::size_t row, std::size_t col) const {
    return cells_.at(row * cols_ + col);
}

std::vector<OrbicularValue> DecisionMatrix::row(std::size_t r) const {
    if (r >= rows_) throw Error(ErrorCode::RaggedMatrix, "row index out of range");
    const auto first = cells_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

namespace {

template <typename Grid>
std::size_t check_rectangular(const Grid& grid, const char* what) {
    if (grid.empty() || grid.front().empty()) {
        throw Error(ErrorCode::RaggedMatrix, std::string(what) + " is empty");
    }
    const auto cols = grid.front().size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i].size() != cols) {
            std::ostringstream os;
            os << what << " row " << i << " has " << grid[i].size() << " columns, expected "
               << cols;
            throw Error(ErrorCode::RaggedMatrix, os.str());
        }
    }
    return cols;
}

}  // namespace

DecisionMatrix form_decision_matrix(const PanelGrid& panels,
                                    const std::optional<RadiusGrid>& radius_override) {
    const auto cols = check_rectangular(panels, "panel grid");
    const auto experts = panels.front().front().size();
    if (radius_override) {
        const auto rcols = check_rectangular(*radius_override, "radius override");
        if (radius_override->size() != panels.size() || rcols != cols) {
            throw Error(ErrorCode::RaggedMatrix, "radius override shape differs from panel grid");
        }
    }
    std::vector<OrbicularValue> cells;
    cells.reserve(panels.size() * cols);
    for (std::size_t i = 0; i < panels.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const auto& panel = panels[i][j];
            if (panel.size() != experts) {
                std::ostringstream os;
                os << "cell (" << i << ", " << j << ") has " << panel.size()
                   << " ratings, expected " << experts;
                throw Error(ErrorCode::RaggedMatrix, os.str());
            }
            if (radius_override) {
                cells.push_back(
                    ValueAccess::make(panel.params(), central_point(panel), (*radius_override)[i][j]));
            } else {
                cells.push_back(form_value(panel));
            }
        }
    }
    return DecisionMatrix(panels.size(), cols, std::move(cells));
}

DecisionMatrix assemble_decision_matrix(const ParameterTriple& p,
                                        const std::vector<std::vector<MembershipTriple>>& grades,
                                        const RadiusGrid& radii, ConstraintPolicy policy) {
    const auto cols = check_rectangular(grades, "grade matrix");
    if (radii.size() != grades.size() || check_rectangular(radii, "radius matrix") != cols) {
        throw Error(ErrorCode::RaggedMatrix, "radius matrix shape differs from grade matrix");
    }
    std::vector<OrbicularValue> cells;
    cells.reserve(grades.size() * cols);
    for (std::size_t i = 0; i < grades.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            cells.push_back(validate_value(p, grades[i][j], radii[i][j], policy));
        }
    }
    return DecisionMatrix(grades.size(), cols, std::move(cells));
}

}  // namespace orbicular

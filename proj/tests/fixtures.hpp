#pragma once

// Reference values: two small sets and a five-alternative case study.

#include <array>
#include <string>
#include <vector>

#include "orbicular/core.hpp"

namespace fixtures {

using Row = std::array<double, 4>;  // mu, xi, nu, r

inline orbicular::OrbicularSet make_set(const std::vector<Row>& rows) {
    const auto p = orbicular::make_params(2, 2, 2);
    orbicular::OrbicularSet s(p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        s.insert("k" + std::to_string(i + 1), orbicular::validate_value(p, r[0], r[1], r[2], r[3]));
    }
    return s;
}

// Two sets over k1..k4 and the results of the set operations on them
inline const std::vector<Row> kSetP = {
    {0.18, 0.34, 0.24, 0.28}, {0.5, 0.38, 0.46, 0.28}, {0.5, 0.23, 0.44, 0.28}, {0.33, 0.35, 0.46, 0.28}};
inline const std::vector<Row> kSetQ = {
    {0.49, 0.28, 0.43, 0.3}, {0.45, 0.41, 0.46, 0.3}, {0.48, 0.41, 0.28, 0.3}, {0.53, 0.18, 0.51, 0.3}};
inline const std::vector<Row> kComplementP = {
    {0.24, 0.34, 0.18, 0.28}, {0.46, 0.38, 0.5, 0.28}, {0.44, 0.23, 0.5, 0.28}, {0.46, 0.35, 0.33, 0.28}};
inline const std::vector<Row> kUnionMin = {
    {0.49, 0.28, 0.24, 0.28}, {0.5, 0.38, 0.46, 0.28}, {0.5, 0.23, 0.28, 0.28}, {0.53, 0.18, 0.46, 0.28}};
inline const std::vector<Row> kUnionMax = {
    {0.49, 0.28, 0.24, 0.3}, {0.5, 0.38, 0.46, 0.3}, {0.5, 0.23, 0.28, 0.3}, {0.53, 0.18, 0.46, 0.3}};
inline const std::vector<Row> kIntersectionMin = {
    {0.18, 0.28, 0.43, 0.28}, {0.45, 0.38, 0.46, 0.28}, {0.48, 0.23, 0.44, 0.28}, {0.33, 0.18, 0.51, 0.28}};
inline const std::vector<Row> kIntersectionMax = {
    {0.18, 0.28, 0.43, 0.3}, {0.45, 0.38, 0.46, 0.3}, {0.48, 0.23, 0.44, 0.3}, {0.33, 0.18, 0.51, 0.3}};

using Grades = std::array<double, 3>;
using GradeTable = std::array<std::array<Grades, 4>, 5>;  // [alternative][criterion]
using ValueTable = std::array<std::array<Row, 4>, 5>;

// Case study, printed central points
inline const GradeTable kCentralPoints = {{
    {{{0.49, 0.48, 0.44}, {0.48, 0.48, 0.48}, {0.49, 0.39, 0.64}, {0.64, 0.44, 0.43}}},
    {{{0.33, 0.68, 0.49}, {0.59, 0.31, 0.53}, {0.52, 0.45, 0.47}, {0.70, 0.48, 0.29}}},
    {{{0.60, 0.16, 0.65}, {0.65, 0.36, 0.60}, {0.60, 0.38, 0.54}, {0.70, 0.54, 0.74}}},
    {{{0.63, 0.47, 0.48}, {0.42, 0.54, 0.59}, {0.65, 0.24, 0.55}, {0.51, 0.54, 0.46}}},
    {{{0.48, 0.42, 0.56}, {0.43, 0.44, 0.48}, {0.50, 0.42, 0.43}, {0.39, 0.55, 0.49}}},
}};

inline const std::vector<std::vector<double>> kRadii = {
    {0.525901, 0.486752, 0.622307, 0.610162}, {0.471404, 0.57431, 0.580409, 0.665069},
    {0.66273, 0.659122, 0.598247, 0.634019},  {0.678004, 0.672512, 0.521133, 0.569087},
    {0.602431, 0.533878, 0.567917, 0.579599}};

// Case study, printed decision matrix
inline const ValueTable kMatrix = {{
    {{{0.49, 0.48, 0.44, 0.52}, {0.48, 0.48, 0.48, 0.48}, {0.49, 0.39, 0.64, 0.62}, {0.64, 0.44, 0.43, 0.61}}},
    {{{0.33, 0.68, 0.49, 0.47}, {0.59, 0.31, 0.53, 0.57}, {0.52, 0.45, 0.47, 0.58}, {0.70, 0.48, 0.29, 0.66}}},
    {{{0.60, 0.16, 0.65, 0.66}, {0.65, 0.36, 0.60, 0.65}, {0.60, 0.38, 0.54, 0.59}, {0.70, 0.54, 0.74, 0.63}}},
    {{{0.63, 0.47, 0.48, 0.67}, {0.42, 0.54, 0.59, 0.67}, {0.65, 0.24, 0.55, 0.52}, {0.51, 0.54, 0.46, 0.56}}},
    {{{0.48, 0.42, 0.56, 0.60}, {0.43, 0.44, 0.48, 0.53}, {0.50, 0.42, 0.43, 0.56}, {0.39, 0.55, 0.49, 0.57}}},
}};

// Case study, printed aggregates at zeta = 1.5
inline const std::array<Row, 5> kAveraged = {{
    {0.56, 0.45, 0.47, 0.56}, {0.61, 0.45, 0.41, 0.60}, {0.66, 0.36, 0.66, 0.64},
    {0.54, 0.49, 0.51, 0.62}, {0.44, 0.47, 0.50, 0.57}}};
inline const std::array<Row, 5> kGeometric = {{
    {0.54, 0.45, 0.48, 0.55}, {0.56, 0.51, 0.45, 0.58}, {0.65, 0.44, 0.67, 0.64},
    {0.52, 0.51, 0.52, 0.61}, {0.43, 0.49, 0.50, 0.56}}};

inline const std::vector<std::string> kExpectedOrder = {"P2", "P3", "P1", "P4", "P5"};

}  // namespace fixtures

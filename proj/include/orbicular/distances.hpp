#pragma once

// Hamming and Euclidean distances between orbicular sets whose radii may vary
// per element. Grades are compared after raising them to their exponents.

#include <string_view>

#include "orbicular/core.hpp"

namespace orbicular {

/// (|d mu^m| + |d xi^o| + |d nu^n|) / 4 + |d r| / 2 at element `id`.
double hamming_point(const OrbicularSet& a, const OrbicularSet& b, std::string_view id);

/// (sqrt((d mu^m^2 + d xi^o^2 + d nu^n^2) / 2) + |d r|) / 2 at element `id`.
double euclidean_point(const OrbicularSet& a, const OrbicularSet& b, std::string_view id);

/// Mean of hamming_point over the shared domain.
double hamming_norm(const OrbicularSet& a, const OrbicularSet& b);

/// Squared grade differences pooled under one root over 2l elements, plus
/// the mean absolute radius difference, halved. Not the mean of
/// euclidean_point values.
double euclidean_norm(const OrbicularSet& a, const OrbicularSet& b);

}  // namespace orbicular

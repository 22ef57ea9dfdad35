#pragma once

#include <compare>
#include <string>
#include <vector>

#include "orbicular/core.hpp"

namespace orbicular {

struct ScoreConfig {
    /// Attitude toward the radius: the radius term enters the score with
    /// weight (2 eta - 1) / 2, so it rewards uncertainty only for eta > 1/2.
    double eta = 1.0;
    /// Display the score as (raw + 1) / 2 in [0, 1].
    bool report_normalized = true;
};

/// Throws InvalidEta unless eta is in [0, 1].
ScoreConfig make_score_config(double eta, bool report_normalized = true);

/// Raw score (mu^m - xi^o - nu^n + r (2 eta - 1)) / 2, in [-1, 1].
double score(const OrbicularValue& v, const ScoreConfig& cfg);

/// Score in the configured display form.
double display_score(const OrbicularValue& v, const ScoreConfig& cfg);

/// mu^m + xi^o + nu^n, in [0, 1] for feasible values.
double accuracy(const OrbicularValue& v);

/// Greater means `a` ranks above `b`: higher score wins, then higher
/// accuracy; otherwise equivalent. Comparisons are exact.
std::weak_ordering compare(const OrbicularValue& a, const OrbicularValue& b,
                           const ScoreConfig& cfg);

struct LabeledValue {
    std::string label;
    OrbicularValue value;
};

struct RankingResult {
    std::vector<std::string> labels;            // input order
    std::vector<OrbicularValue> aggregates;     // input order
    std::vector<double> scores;                 // raw, input order
    std::vector<double> display_scores;         // per ScoreConfig, input order
    std::vector<double> accuracies;             // input order
    std::vector<std::size_t> order;             // indices into labels, best first

    std::vector<std::string> ordered_labels() const;
    /// Labels joined by " > ", best first.
    std::string ranking_line() const;
};

/// Sorts by (score desc, accuracy desc, input position). Throws EmptyInput.
RankingResult rank(const std::vector<LabeledValue>& values, const ScoreConfig& cfg);

}  // namespace orbicular

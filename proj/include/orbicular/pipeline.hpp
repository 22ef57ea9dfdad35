#pragma once

// Group decision scheme: expert panels -> decision matrix -> one aggregate
// per alternative -> scores -> ranking, plus zeta sweeps and reports.

#include <optional>
#include <string>
#include <vector>

#include "orbicular/core.hpp"
#include "orbicular/formation.hpp"
#include "orbicular/hamacher.hpp"
#include "orbicular/scoring.hpp"

namespace orbicular {

enum class AggregationOperator { HWA, HWG };
/// Auto uses the override table when the problem has one.
enum class RadiusSource { Auto, Computed, Override };

std::string_view to_string(AggregationOperator op);
std::string_view to_string(RadiusSource src);

using RatingCube = std::vector<std::vector<std::vector<MembershipTriple>>>;  // [alt][crit][expert]

struct DecisionProblem {
    ParameterTriple params;
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::string> experts;
    WeightVector weights;
    RatingCube ratings;
    std::optional<RadiusGrid> radius_override;
    ConstraintPolicy policy = ConstraintPolicy::Enforce;
};

bool operator==(const DecisionProblem& a, const DecisionProblem& b);

struct PipelineConfig {
    AggregationOperator op = AggregationOperator::HWA;
    HamacherParam zeta = make_zeta(1.5);
    ScoreConfig score;
    RadiusSource radii = RadiusSource::Auto;

    friend bool operator==(const PipelineConfig& a, const PipelineConfig& b) {
        return a.op == b.op && a.zeta.zeta() == b.zeta.zeta() && a.score.eta == b.score.eta &&
               a.score.report_normalized == b.score.report_normalized && a.radii == b.radii;
    }
};

/// Checks labels, dimensions, weights and every rating and override radius.
/// Data errors name the cell, e.g. "alternative 'P3', criterion 'L1', expert 'g2'".
void validate_problem(const DecisionProblem& problem);

/// One line per rating or matrix cell whose power sum exceeds 1.
std::vector<std::string> constraint_diagnostics(const DecisionProblem& problem,
                                                RadiusSource radii = RadiusSource::Auto);

/// Resolves Auto against the problem. Throws ParseError when Override is
/// requested but the problem has no radius table.
RadiusSource resolve_radius_source(const DecisionProblem& problem, RadiusSource requested);

DecisionMatrix form_matrix(const DecisionProblem& problem,
                           RadiusSource radii = RadiusSource::Auto);

RankingResult solve(const DecisionProblem& problem, const PipelineConfig& cfg);
RankingResult solve(const DecisionProblem& problem, const DecisionMatrix& matrix,
                    const PipelineConfig& cfg);

struct SweepResult {
    AggregationOperator op;
    std::vector<double> zetas;
    std::vector<RankingResult> results;  // one per zeta
    bool order_invariant = true;
};

/// Throws EmptyInput when `zetas` is empty. cfg.zeta is ignored.
SweepResult sensitivity_sweep(const DecisionProblem& problem, const PipelineConfig& cfg,
                              const std::vector<HamacherParam>& zetas);

struct OperatorRun {
    AggregationOperator op;
    double zeta;
    RankingResult result;
    std::optional<SweepResult> sweep;
};

struct ReportDocument {
    std::string text;
    std::string json;
    /// (operator name, CSV with columns zeta,alternative,score); empty without a sweep.
    std::vector<std::pair<std::string, std::string>> plot_csv;
};

ReportDocument report(const DecisionProblem& problem, const PipelineConfig& cfg,
                      const std::vector<OperatorRun>& runs);

/// x truncated (not rounded) to two decimals, as printed in tables.
double truncate2(double x);

}  // namespace orbicular

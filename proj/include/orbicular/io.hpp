#pragma once

// Problem files (JSON, optionally with one ratings CSV per expert) and
// report output.
//
// {
//   "params": {"m": 2, "n": 2, "o": 2},
//   "alternatives": ["P1", ...], "criteria": ["L1", ...], "experts": ["g1", ...],
//   "weights": [0.2, ...],
//   "ratings": [[[mu, xi, nu], ...per expert], ...per criterion], ...per alternative],
//   "ratings_csv": ["g1.csv", ...],     // instead of "ratings"; paths relative to the file
//   "radii": [[r, ...per criterion], ...per alternative],            // optional
//   "constraint": "enforce" | "report",                               // optional
//   "config": {"operator": "hwa", "zeta": 1.5, "eta": 1, "normalized": true,
//              "radii": "auto" | "eq4" | "override"}                  // optional
// }
//
// Ratings CSV rows: alternative,criterion,mu,xi,nu (header line required).

#include <filesystem>
#include <string>

#include "orbicular/pipeline.hpp"

namespace orbicular {

struct ProblemFile {
    DecisionProblem problem;
    PipelineConfig config;

    friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

enum class RatingsFormat { Inline, Csv };

/// Schema errors throw ParseError naming the field; unreadable files throw
/// IoError. Ratings are not range-checked here (see validate_problem).
ProblemFile load_problem(const std::filesystem::path& path);
ProblemFile parse_problem(const std::string& json_text,
                          const std::filesystem::path& base_dir = ".");

/// Inline writes one JSON file. Csv also writes <stem>_<expert>.csv next to it.
void save_problem(const ProblemFile& file, const std::filesystem::path& path,
                  RatingsFormat format = RatingsFormat::Inline);
std::string problem_to_json(const ProblemFile& file);

/// Writes report.txt, report.json and scores_<op>.csv into `dir`.
void emit_report(const ReportDocument& doc, const std::filesystem::path& dir);

}  // namespace orbicular

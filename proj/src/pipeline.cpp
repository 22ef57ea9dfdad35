#include "orbicular/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

namespace orbicular {

std::string_view to_string(AggregationOperator op) {
    return op == AggregationOperator::HWA ? "hwa" : "hwg";
}

std::string_view to_string(RadiusSource src) {
    switch (src) {
        case RadiusSource::Auto: return "auto";
        case RadiusSource::Computed: return "eq4";
        case RadiusSource::Override: return "override";
    }
    return "auto";
}

bool operator==(const DecisionProblem& a, const DecisionProblem& b) {
    const auto wa = a.weights.values();
    const auto wb = b.weights.values();
    return a.params == b.params && a.alternatives == b.alternatives &&
           a.criteria == b.criteria && a.experts == b.experts &&
           std::equal(wa.begin(), wa.end(), wb.begin(), wb.end()) && a.ratings == b.ratings &&
           a.radius_override == b.radius_override && a.policy == b.policy;
}

namespace {

std::string cell_name(const DecisionProblem& pr, std::size_t a, std::size_t c) {
    return "alternative '" + pr.alternatives[a] + "', criterion '" + pr.criteria[c] + "'";
}

std::string cell_name(const DecisionProblem& pr, std::size_t a, std::size_t c, std::size_t e) {
    return cell_name(pr, a, c) + ", expert '" + pr.experts[e] + "'";
}

void check_labels(const std::vector<std::string>& labels, const char* what) {
    if (labels.empty()) throw Error(ErrorCode::EmptyInput, std::string("no ") + what);
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second) {
            throw Error(ErrorCode::DuplicateElement,
                        std::string(what) + " label '" + l + "' appears twice");
        }
    }
}

void check_size(std::size_t got, std::size_t want, const std::string& where) {
    if (got != want) {
        std::ostringstream os;
        os << where << " has " << got << " entries, expected " << want;
        throw Error(ErrorCode::RaggedMatrix, os.str());
    }
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

}  // namespace

void validate_problem(const DecisionProblem& pr) {
    check_labels(pr.alternatives, "alternative");
    check_labels(pr.criteria, "criterion");
    check_labels(pr.experts, "expert");
    if (pr.weights.size() != pr.criteria.size()) {
        std::ostringstream os;
        os << pr.weights.size() << " weights for " << pr.criteria.size() << " criteria";
        throw Error(ErrorCode::LengthMismatch, os.str());
    }
    check_size(pr.ratings.size(), pr.alternatives.size(), "ratings");
    for (std::size_t a = 0; a < pr.ratings.size(); ++a) {
        check_size(pr.ratings[a].size(), pr.criteria.size(),
                   "ratings for alternative '" + pr.alternatives[a] + "'");
        for (std::size_t c = 0; c < pr.ratings[a].size(); ++c) {
            check_size(pr.ratings[a][c].size(), pr.experts.size(),
                       "ratings for " + cell_name(pr, a, c));
            for (std::size_t e = 0; e < pr.ratings[a][c].size(); ++e) {
                try {
                    validate_value(pr.params, pr.ratings[a][c][e], 0.0, pr.policy);
                } catch (const Error& err) {
                    throw Error(err.code(), cell_name(pr, a, c, e) + ": " + err.detail());
                }
            }
        }
    }
    if (pr.radius_override) {
        const auto& radii = *pr.radius_override;
        check_size(radii.size(), pr.alternatives.size(), "radii");
        for (std::size_t a = 0; a < radii.size(); ++a) {
            check_size(radii[a].size(), pr.criteria.size(),
                       "radii for alternative '" + pr.alternatives[a] + "'");
            for (std::size_t c = 0; c < radii[a].size(); ++c) {
                const double r = radii[a][c];
                if (!(r >= -kTolerance && r <= 1.0 + kTolerance)) {
                    std::ostringstream os;
                    os << cell_name(pr, a, c) << ": radius " << r << " outside [0, 1]";
                    throw Error(ErrorCode::RadiusOutOfRange, os.str());
                }
            }
        }
    }
}

RadiusSource resolve_radius_source(const DecisionProblem& pr, RadiusSource requested) {
    if (requested == RadiusSource::Auto) {
        return pr.radius_override ? RadiusSource::Override : RadiusSource::Computed;
    }
    if (requested == RadiusSource::Override && !pr.radius_override) {
        throw Error(ErrorCode::ParseError, "radius override requested but 'radii' is absent");
    }
    return requested;
}

DecisionMatrix form_matrix(const DecisionProblem& pr, RadiusSource radii) {
    validate_problem(pr);
    const auto src = resolve_radius_source(pr, radii);
    PanelGrid panels;
    for (const auto& row : pr.ratings) {
        auto& out = panels.emplace_back();
        for (const auto& cell : row) out.push_back(make_panel(pr.params, cell, pr.policy));
    }
    if (src == RadiusSource::Override) return form_decision_matrix(panels, pr.radius_override);
    return form_decision_matrix(panels);
}

std::vector<std::string> constraint_diagnostics(const DecisionProblem& pr, RadiusSource radii) {
    std::vector<std::string> out;
    const auto note = [&](const std::string& where, double sum) {
        out.push_back(where + ": power sum " + fixed(sum, 4) + " exceeds 1");
    };
    for (std::size_t a = 0; a < pr.ratings.size(); ++a) {
        for (std::size_t c = 0; c < pr.ratings[a].size(); ++c) {
            for (std::size_t e = 0; e < pr.ratings[a][c].size(); ++e) {
                const double sum = power_sum(pr.params, pr.ratings[a][c][e]);
                if (sum > 1.0 + kTolerance) note(cell_name(pr, a, c, e), sum);
            }
        }
    }
    auto relaxed = pr;
    relaxed.policy = ConstraintPolicy::Report;
    const auto m = form_matrix(relaxed, radii);
    for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!m.at(a, c).feasible()) {
                note(cell_name(pr, a, c) + " (formed)", 1.0 - constraint_slack(m.at(a, c)));
            }
        }
    }
    return out;
}

RankingResult solve(const DecisionProblem& pr, const DecisionMatrix& matrix,
                    const PipelineConfig& cfg) {
    std::vector<LabeledValue> aggregates;
    for (std::size_t a = 0; a < matrix.rows(); ++a) {
        const auto row = matrix.row(a);
        aggregates.push_back({pr.alternatives.at(a),
                              cfg.op == AggregationOperator::HWA ? hwa(row, pr.weights, cfg.zeta)
                                                                 : hwg(row, pr.weights, cfg.zeta)});
    }
    return rank(aggregates, cfg.score);
}

RankingResult solve(const DecisionProblem& pr, const PipelineConfig& cfg) {
    return solve(pr, form_matrix(pr, cfg.radii), cfg);
}

SweepResult sensitivity_sweep(const DecisionProblem& pr, const PipelineConfig& cfg,
                              const std::vector<HamacherParam>& zetas) {
    if (zetas.empty()) throw Error(ErrorCode::EmptyInput, "no zeta values to sweep");
    const auto matrix = form_matrix(pr, cfg.radii);
    SweepResult out{cfg.op, {}, {}, true};
    for (const auto& z : zetas) {
        auto at = cfg;
        at.zeta = z;
        out.zetas.push_back(z.zeta());
        out.results.push_back(solve(pr, matrix, at));
        if (out.results.back().order != out.results.front().order) out.order_invariant = false;
    }
    return out;
}

double truncate2(double x) { return std::floor(x * 100.0 + 1e-9) / 100.0; }

namespace {

using ojson = nlohmann::ordered_json;

std::string print2(const OrbicularValue& v) {
    return "(" + fixed(truncate2(v.mu()), 2) + ", " + fixed(truncate2(v.xi()), 2) + ", " +
           fixed(truncate2(v.nu()), 2) + "; " + fixed(truncate2(v.r()), 2) + ")";
}

std::string print4(const OrbicularValue& v) {
    return "(" + fixed(v.mu(), 4) + ", " + fixed(v.xi(), 4) + ", " + fixed(v.nu(), 4) + "; " +
           fixed(v.r(), 4) + ")";
}

ojson value_json(const OrbicularValue& v) {
    return ojson{{"mu", v.mu()}, {"xi", v.xi()}, {"nu", v.nu()}, {"r", v.r()},
                 {"print", print2(v)}};
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string radius_provenance(RadiusSource src) {
    return src == RadiusSource::Override ? "override table"
                                         : "computed (enclosing radius of expert ratings)";
}

std::string operator_label(AggregationOperator op) {
    return op == AggregationOperator::HWA ? "HWA" : "HWG";
}

}  // namespace

ReportDocument report(const DecisionProblem& pr, const PipelineConfig& cfg,
                      const std::vector<OperatorRun>& runs) {
    const auto src = resolve_radius_source(pr, cfg.radii);
    auto relaxed = pr;
    relaxed.policy = ConstraintPolicy::Report;
    const auto matrix = form_matrix(relaxed, src);
    const auto diagnostics = constraint_diagnostics(pr, src);

    ReportDocument doc;
    ojson j;
    std::ostringstream t;

    j["params"] = {{"m", pr.params.m()}, {"n", pr.params.n()}, {"o", pr.params.o()},
                   {"lcm_checked", pr.params.lcm_checked()}};
    j["radius_source"] = radius_provenance(src);
    j["eta"] = cfg.score.eta;
    j["normalized"] = cfg.score.report_normalized;
    j["constraint"] = pr.policy == ConstraintPolicy::Enforce ? "enforce" : "report";
    j["diagnostics"] = diagnostics;

    t << "Orbicular T-spherical fuzzy decision report\n";
    t << "params: " << describe(pr.params) << "\n";
    t << "radius source: " << radius_provenance(src) << "\n";
    t << "eta: " << cfg.score.eta
      << ", score display: " << (cfg.score.report_normalized ? "normalized (raw + 1) / 2" : "raw")
      << "\n";
    t << "constraint policy: " << (pr.policy == ConstraintPolicy::Enforce ? "enforce" : "report")
      << ", violations: " << diagnostics.size() << "\n";
    for (const auto& d : diagnostics) t << "  " << d << "\n";

    // Decision matrix.
    ojson cells = ojson::array();
    t << "\nDecision matrix (two decimals, truncated)\n" << pad("", 8);
    for (const auto& c : pr.criteria) t << pad(c, 26);
    t << "\n";
    for (std::size_t a = 0; a < matrix.rows(); ++a) {
        t << pad(pr.alternatives[a], 8);
        for (std::size_t c = 0; c < matrix.cols(); ++c) {
            const auto& v = matrix.at(a, c);
            auto cell = value_json(v);
            cell["alternative"] = pr.alternatives[a];
            cell["criterion"] = pr.criteria[c];
            cells.push_back(std::move(cell));
            t << pad(print2(v), 26);
        }
        t << "\n";
    }
    j["matrix"] = std::move(cells);

    ojson jruns = ojson::array();
    for (const auto& run : runs) {
        const auto& res = run.result;
        const auto name = operator_label(run.op);
        ojson jr;
        jr["operator"] = name;
        jr["zeta"] = run.zeta;

        t << "\nAggregates (" << name << ", zeta = " << run.zeta << ")\n";
        ojson aggs = ojson::array();
        for (std::size_t i = 0; i < res.labels.size(); ++i) {
            auto v = value_json(res.aggregates[i]);
            v["alternative"] = res.labels[i];
            aggs.push_back(std::move(v));
            t << pad(res.labels[i], 8) << print4(res.aggregates[i]) << "   "
              << print2(res.aggregates[i]) << "\n";
        }
        jr["aggregates"] = std::move(aggs);

        t << "\nScores (" << name << ")\n"
          << pad("rank", 6) << pad("alt", 8) << pad("score", 12) << pad("raw", 12)
          << pad("accuracy", 12) << "margin\n";
        ojson scores = ojson::array();
        for (std::size_t k = 0; k < res.order.size(); ++k) {
            const auto i = res.order[k];
            const bool last = k + 1 == res.order.size();
            const double margin =
                last ? 0.0 : res.display_scores[i] - res.display_scores[res.order[k + 1]];
            ojson s{{"rank", k + 1},
                    {"alternative", res.labels[i]},
                    {"score", res.display_scores[i]},
                    {"raw_score", res.scores[i]},
                    {"accuracy", res.accuracies[i]}};
            s["margin"] = last ? ojson(nullptr) : ojson(margin);
            scores.push_back(std::move(s));
            t << pad(std::to_string(k + 1), 6) << pad(res.labels[i], 8)
              << pad(fixed(res.display_scores[i], 6), 12) << pad(fixed(res.scores[i], 6), 12)
              << pad(fixed(res.accuracies[i], 6), 12) << (last ? "-" : fixed(margin, 6))
              << "\n";
        }
        jr["scores"] = std::move(scores);
        jr["ranking"] = res.ordered_labels();
        jr["ranking_line"] = res.ranking_line();
        t << "Ranking (" << name << "): " << res.ranking_line() << "\n";
        jruns.push_back(std::move(jr));
    }
    j["runs"] = std::move(jruns);

    ojson sens = ojson::array();
    for (const auto& run : runs) {
        if (!run.sweep) continue;
        const auto& sw = *run.sweep;
        const auto name = operator_label(run.op);
        ojson js;
        js["operator"] = name;
        js["order_invariant"] = sw.order_invariant;
        ojson rows = ojson::array();
        std::ostringstream csv;
        csv << "zeta,alternative,score\n";

        t << "\nSensitivity (" << name << "), order "
          << (sw.order_invariant ? "invariant" : "changes") << " across zeta\n"
          << pad("zeta", 8);
        for (const auto& l : pr.alternatives) t << pad(l, 10);
        t << "ranking\n";
        for (std::size_t z = 0; z < sw.zetas.size(); ++z) {
            const auto& res = sw.results[z];
            ojson per = ojson::object();
            t << pad(fixed(sw.zetas[z], 2), 8);
            for (std::size_t i = 0; i < res.labels.size(); ++i) {
                per[res.labels[i]] = res.display_scores[i];
                t << pad(fixed(res.display_scores[i], 4), 10);
                csv << ojson(sw.zetas[z]).dump() << "," << res.labels[i] << ","
                    << ojson(res.display_scores[i]).dump() << "\n";
            }
            t << res.ranking_line() << "\n";
            rows.push_back(ojson{{"zeta", sw.zetas[z]},
                                 {"scores", std::move(per)},
                                 {"ranking_line", res.ranking_line()}});
        }
        js["rows"] = std::move(rows);
        sens.push_back(std::move(js));
        doc.plot_csv.emplace_back(std::string(to_string(run.op)), csv.str());
    }
    if (!sens.empty()) j["sensitivity"] = std::move(sens);

    doc.text = t.str();
    doc.json = j.dump(2) + "\n";
    return doc;
}

}  // namespace orbicular

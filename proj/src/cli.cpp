#include "orbicular/cli.hpp"

#include <charconv>
#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbicular/io.hpp"

namespace orbicular {

namespace {

struct Options {
    std::string file;
    std::string op;
    std::optional<double> zeta;
    std::optional<double> eta;
    std::optional<bool> normalized;
    std::string radii;
    std::string zetas;
    bool zetas_given = false;
    bool csv = false;
    std::string out;
};

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

std::vector<HamacherParam> parse_zetas(const std::string& text) {
    std::vector<HamacherParam> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        double z = 0.0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), z);
        if (ec != std::errc() || end != item.data() + item.size()) {
            throw CLI::ValidationError("--zetas", "'" + item + "' is not a number");
        }
        out.push_back(make_zeta(z));
    }
    return out;
}

PipelineConfig effective_config(const ProblemFile& f, const Options& o) {
    auto cfg = f.config;
    if (o.op == "hwa") cfg.op = AggregationOperator::HWA;
    if (o.op == "hwg") cfg.op = AggregationOperator::HWG;
    if (o.zeta) cfg.zeta = make_zeta(*o.zeta);
    cfg.score = make_score_config(o.eta.value_or(cfg.score.eta),
                                  o.normalized.value_or(cfg.score.report_normalized));
    if (o.radii == "eq4") cfg.radii = RadiusSource::Computed;
    if (o.radii == "override") cfg.radii = RadiusSource::Override;
    return cfg;
}

void warn_lcm(const ProblemFile& f, std::ostream& err) {
    if (!f.problem.params.lcm_checked()) {
        err << "warning: o = LCM(m, n) is undefined for reciprocal exponents; o accepted as "
               "given\n";
    }
}

int run_validate(const Options& o, std::ostream& out, std::ostream& err) {
    const auto f = load_problem(o.file);
    warn_lcm(f, err);
    validate_problem(f.problem);
    const auto& pr = f.problem;
    out << "ok: " << pr.alternatives.size() << " alternatives, " << pr.criteria.size()
        << " criteria, " << pr.experts.size() << " experts, " << describe(pr.params) << "\n";
    for (const auto& d : constraint_diagnostics(pr, f.config.radii)) {
        out << "constraint (reported): " << d << "\n";
    }
    return 0;
}

int run_form(const Options& o, std::ostream& out, std::ostream& err) {
    const auto f = load_problem(o.file);
    warn_lcm(f, err);
    const auto cfg = effective_config(f, o);
    const auto& pr = f.problem;
    const auto src = resolve_radius_source(pr, cfg.radii);
    const auto m = form_matrix(pr, src);
    out << "radius source: " << to_string(src) << "\n";
    out << "alternative,criterion,mu,xi,nu,r,printed\n";
    for (std::size_t a = 0; a < m.rows(); ++a) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& v = m.at(a, c);
            out << pr.alternatives[a] << "," << pr.criteria[c] << "," << fixed(v.mu(), 6) << ","
                << fixed(v.xi(), 6) << "," << fixed(v.nu(), 6) << "," << fixed(v.r(), 6) << ",\"("
                << fixed(truncate2(v.mu()), 2) << ", " << fixed(truncate2(v.xi()), 2) << ", "
                << fixed(truncate2(v.nu()), 2) << "; " << fixed(truncate2(v.r()), 2) << ")\"\n";
        }
    }
    return 0;
}

int run_solve(const Options& o, std::ostream& out, std::ostream& err) {
    const auto f = load_problem(o.file);
    warn_lcm(f, err);
    const auto cfg = effective_config(f, o);
    const auto res = solve(f.problem, cfg);
    out << "operator: " << to_string(cfg.op) << ", zeta: " << cfg.zeta.zeta()
        << ", eta: " << cfg.score.eta << "\n";
    out << "alternative,mu,xi,nu,r,score,accuracy\n";
    for (std::size_t i = 0; i < res.labels.size(); ++i) {
        const auto& v = res.aggregates[i];
        out << res.labels[i] << "," << fixed(v.mu(), 6) << "," << fixed(v.xi(), 6) << ","
            << fixed(v.nu(), 6) << "," << fixed(v.r(), 6) << "," << fixed(res.display_scores[i], 6)
            << "," << fixed(res.accuracies[i], 6) << "\n";
    }
    out << "ranking: " << res.ranking_line() << "\n";
    return 0;
}

int run_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    const auto f = load_problem(o.file);
    warn_lcm(f, err);
    const auto cfg = effective_config(f, o);
    const auto zetas = o.zetas_given ? parse_zetas(o.zetas) : default_zeta_grid();
    const auto sw = sensitivity_sweep(f.problem, cfg, zetas);
    const auto& alts = f.problem.alternatives;
    if (o.csv) {
        out << "zeta,alternative,score\n";
    } else {
        out << "operator: " << to_string(cfg.op) << "\nzeta";
        for (const auto& a : alts) out << "," << a;
        out << ",ranking\n";
    }
    for (std::size_t z = 0; z < sw.zetas.size(); ++z) {
        const auto& res = sw.results[z];
        if (o.csv) {
            for (std::size_t i = 0; i < alts.size(); ++i) {
                out << sw.zetas[z] << "," << alts[i] << "," << fixed(res.display_scores[i], 6)
                    << "\n";
            }
            continue;
        }
        out << sw.zetas[z];
        for (std::size_t i = 0; i < alts.size(); ++i) out << "," << fixed(res.display_scores[i], 6);
        out << "," << res.ranking_line() << "\n";
    }
    if (!o.csv) out << "order " << (sw.order_invariant ? "invariant" : "changes") << " across zeta\n";
    return 0;
}

int run_report(const Options& o, std::ostream& out, std::ostream& err) {
    const auto f = load_problem(o.file);
    warn_lcm(f, err);
    const auto base = effective_config(f, o);
    std::vector<AggregationOperator> ops;
    if (o.op.empty()) ops = {AggregationOperator::HWA, AggregationOperator::HWG};
    else ops = {base.op};
    const auto zetas = o.zetas_given ? parse_zetas(o.zetas) : default_zeta_grid();
    std::vector<OperatorRun> runs;
    for (auto op : ops) {
        auto cfg = base;
        cfg.op = op;
        OperatorRun run{op, cfg.zeta.zeta(), solve(f.problem, cfg), std::nullopt};
        if (!zetas.empty()) run.sweep = sensitivity_sweep(f.problem, cfg, zetas);
        runs.push_back(std::move(run));
    }
    const auto doc = report(f.problem, base, runs);
    emit_report(doc, o.out);
    out << "report written to " << o.out << "\n";
    for (const auto& r : runs) {
        out << "ranking (" << to_string(r.op) << "): " << r.result.ranking_line() << "\n";
    }
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbicular T-spherical fuzzy group decision tool", "orbicular"};
    app.require_subcommand(1);
    Options o;

    const auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "problem file (JSON)")->required();
    };
    const auto add_model = [&](CLI::App* sub) {
        sub->add_option("--op", o.op, "aggregation operator")->check(CLI::IsMember({"hwa", "hwg"}));
        sub->add_option("--zeta", o.zeta, "Hamacher parameter (> 0)");
        sub->add_option("--eta", o.eta, "radius attitude in [0, 1]");
        sub->add_option("--normalized", o.normalized, "show scores as (raw + 1) / 2");
        sub->add_option("--radii", o.radii, "radius source")
            ->check(CLI::IsMember({"eq4", "override"}));
    };

    auto* validate = app.add_subcommand("validate", "check schema and constraints");
    add_file(validate);
    auto* form = app.add_subcommand("form", "print the formed decision matrix");
    add_file(form);
    form->add_option("--radii", o.radii, "radius source")->check(CLI::IsMember({"eq4", "override"}));
    auto* solve_cmd = app.add_subcommand("solve", "aggregate, score and rank");
    add_file(solve_cmd);
    add_model(solve_cmd);
    auto* sweep = app.add_subcommand("sweep", "rank across a zeta grid");
    add_file(sweep);
    add_model(sweep);
    sweep->add_option("--zetas", o.zetas, "comma-separated zeta values (default 1.5,2,...,6)");
    sweep->add_flag("--csv", o.csv, "emit zeta,alternative,score rows");
    auto* report_cmd = app.add_subcommand("report", "write text, JSON and plot data");
    add_file(report_cmd);
    add_model(report_cmd);
    report_cmd->add_option("--zetas", o.zetas, "zeta grid; empty for no sensitivity section");
    report_cmd->add_option("--out", o.out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    o.zetas_given = (sweep->parsed() && sweep->count("--zetas") > 0) ||
                    (report_cmd->parsed() && report_cmd->count("--zetas") > 0);

    try {
        if (validate->parsed()) return run_validate(o, out, err);
        if (form->parsed()) return run_form(o, out, err);
        if (solve_cmd->parsed()) return run_solve(o, out, err);
        if (sweep->parsed()) return run_sweep(o, out, err);
        return run_report(o, out, err);
    } catch (const CLI::ValidationError& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cli_main(int argc, const char* const* argv) {
    return cli_main(argc, argv, std::cout, std::cerr);
}

}  // namespace orbicular

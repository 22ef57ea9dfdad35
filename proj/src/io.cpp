#include "orbicular/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace orbicular {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& require(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) parse_fail(std::string("missing field '") + key + "'");
    return *it;
}

double number(const json& v, const std::string& field) {
    if (!v.is_number()) parse_fail("field '" + field + "' must be a number");
    return v.get<double>();
}

std::vector<std::string> labels(const json& obj, const char* key) {
    const auto& arr = require(obj, key);
    if (!arr.is_array()) parse_fail(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string()) {
            parse_fail(std::string("field '") + key + "[" + std::to_string(i) +
                       "]' must be a string");
        }
        out.push_back(arr[i].get<std::string>());
    }
    return out;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    }
}

template <typename F>
auto tagged(const std::string& field, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.code(), "field '" + field + "': " + e.detail());
    }
}

std::size_t index_of(const std::vector<std::string>& v, const std::string& label) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == label) return i;
    }
    return v.size();
}

double parse_csv_number(std::string_view s, const std::string& where) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    double x = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || end != s.data() + s.size()) {
        parse_fail(where + ": '" + std::string(s) + "' is not a number");
    }
    return x;
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \r");
    const auto e = s.find_last_not_of(" \r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Fills ratings[a][c][expert] from one expert's CSV file.
void read_ratings_csv(const fs::path& path, std::size_t expert, const DecisionProblem& pr,
                      RatingCube& ratings, std::vector<std::vector<bool>>& seen) {
    std::istringstream in(read_file(path));
    std::string line;
    std::size_t line_no = 0;
    for (auto& row : seen) std::fill(row.begin(), row.end(), false);
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 || trim(line).empty()) continue;
        const auto where = path.filename().string() + ":" + std::to_string(line_no);
        std::vector<std::string> f;
        std::stringstream ls(line);
        for (std::string cell; std::getline(ls, cell, ',');) f.push_back(trim(cell));
        if (f.size() != 5) parse_fail(where + ": expected alternative,criterion,mu,xi,nu");
        const auto a = index_of(pr.alternatives, f[0]);
        const auto c = index_of(pr.criteria, f[1]);
        if (a == pr.alternatives.size()) parse_fail(where + ": unknown alternative '" + f[0] + "'");
        if (c == pr.criteria.size()) parse_fail(where + ": unknown criterion '" + f[1] + "'");
        if (seen[a][c]) parse_fail(where + ": duplicate row for " + f[0] + "/" + f[1]);
        seen[a][c] = true;
        ratings[a][c][expert] = {parse_csv_number(f[2], where), parse_csv_number(f[3], where),
                                 parse_csv_number(f[4], where)};
    }
    for (std::size_t a = 0; a < seen.size(); ++a) {
        for (std::size_t c = 0; c < seen[a].size(); ++c) {
            if (!seen[a][c]) {
                parse_fail(path.filename().string() + ": no row for alternative '" +
                           pr.alternatives[a] + "', criterion '" + pr.criteria[c] + "'");
            }
        }
    }
}

RatingCube inline_ratings(const json& arr, const DecisionProblem& pr) {
    if (!arr.is_array()) parse_fail("field 'ratings' must be an array");
    RatingCube out;
    for (std::size_t a = 0; a < arr.size(); ++a) {
        if (!arr[a].is_array()) parse_fail("ratings[" + std::to_string(a) + "] must be an array");
        auto& row = out.emplace_back();
        for (std::size_t c = 0; c < arr[a].size(); ++c) {
            const auto& cell = arr[a][c];
            const auto path = "ratings[" + std::to_string(a) + "][" + std::to_string(c) + "]";
            if (!cell.is_array()) parse_fail(path + " must be an array");
            auto& panel = row.emplace_back();
            for (std::size_t e = 0; e < cell.size(); ++e) {
                const auto& t = cell[e];
                auto where = path + "[" + std::to_string(e) + "]";
                if (a < pr.alternatives.size() && c < pr.criteria.size() &&
                    e < pr.experts.size()) {
                    where += " (alternative '" + pr.alternatives[a] + "', criterion '" +
                             pr.criteria[c] + "', expert '" + pr.experts[e] + "')";
                }
                if (!t.is_array() || t.size() != 3) parse_fail(where + ": expected [mu, xi, nu]");
                panel.push_back({number(t[0], where + ".mu"), number(t[1], where + ".xi"),
                                 number(t[2], where + ".nu")});
            }
        }
    }
    return out;
}

AggregationOperator parse_operator(const std::string& s) {
    if (s == "hwa" || s == "HWA") return AggregationOperator::HWA;
    if (s == "hwg" || s == "HWG") return AggregationOperator::HWG;
    parse_fail("field 'config.operator': expected 'hwa' or 'hwg', got '" + s + "'");
}

RadiusSource parse_radius_source(const std::string& s) {
    if (s == "auto") return RadiusSource::Auto;
    if (s == "eq4" || s == "computed") return RadiusSource::Computed;
    if (s == "override") return RadiusSource::Override;
    parse_fail("field 'config.radii': expected 'auto', 'eq4' or 'override', got '" + s + "'");
}

std::string string_field(const json& v, const std::string& field) {
    if (!v.is_string()) parse_fail("field '" + field + "' must be a string");
    return v.get<std::string>();
}

PipelineConfig parse_config(const json& doc) {
    PipelineConfig cfg;
    const auto it = doc.find("config");
    if (it == doc.end()) return cfg;
    const auto& c = *it;
    if (!c.is_object()) parse_fail("field 'config' must be an object");
    if (c.contains("operator")) cfg.op = parse_operator(string_field(c["operator"], "config.operator"));
    if (c.contains("zeta")) {
        cfg.zeta = tagged("config.zeta", [&] { return make_zeta(number(c["zeta"], "config.zeta")); });
    }
    double eta = cfg.score.eta;
    bool normalized = cfg.score.report_normalized;
    if (c.contains("eta")) eta = number(c["eta"], "config.eta");
    if (c.contains("normalized")) {
        if (!c["normalized"].is_boolean()) parse_fail("field 'config.normalized' must be a boolean");
        normalized = c["normalized"].get<bool>();
    }
    cfg.score = tagged("config.eta", [&] { return make_score_config(eta, normalized); });
    if (c.contains("radii")) cfg.radii = parse_radius_source(string_field(c["radii"], "config.radii"));
    return cfg;
}

std::string csv_number(double x) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

}  // namespace

ProblemFile parse_problem(const std::string& json_text, const fs::path& base_dir) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        parse_fail(e.what());
    }
    if (!doc.is_object()) parse_fail("top level must be an object");

    const auto& params = require(doc, "params");
    if (!params.is_object()) parse_fail("field 'params' must be an object");
    const auto p = tagged("params", [&] {
        return make_params(number(require(params, "m"), "params.m"),
                           number(require(params, "n"), "params.n"),
                           number(require(params, "o"), "params.o"));
    });

    auto alternatives = labels(doc, "alternatives");
    auto criteria = labels(doc, "criteria");
    auto experts = labels(doc, "experts");

    const auto& wj = require(doc, "weights");
    if (!wj.is_array()) parse_fail("field 'weights' must be an array");
    std::vector<double> w;
    for (std::size_t i = 0; i < wj.size(); ++i) {
        w.push_back(number(wj[i], "weights[" + std::to_string(i) + "]"));
    }
    auto weights = tagged("weights", [&] { return make_weights(std::move(w)); });

    ConstraintPolicy policy = ConstraintPolicy::Enforce;
    if (doc.contains("constraint")) {
        const auto s = string_field(doc["constraint"], "constraint");
        if (s == "report") policy = ConstraintPolicy::Report;
        else if (s != "enforce") parse_fail("field 'constraint': expected 'enforce' or 'report'");
    }

    DecisionProblem pr{p,     std::move(alternatives), std::move(criteria), std::move(experts),
                       std::move(weights), {},         std::nullopt,        policy};

    if (doc.contains("ratings")) {
        pr.ratings = inline_ratings(doc["ratings"], pr);
    } else if (doc.contains("ratings_csv")) {
        const auto& files = doc["ratings_csv"];
        if (!files.is_array() || files.size() != pr.experts.size()) {
            parse_fail("field 'ratings_csv' must list one file per expert");
        }
        pr.ratings.assign(pr.alternatives.size(),
                          std::vector<std::vector<MembershipTriple>>(
                              pr.criteria.size(), std::vector<MembershipTriple>(pr.experts.size())));
        std::vector<std::vector<bool>> seen(pr.alternatives.size(),
                                            std::vector<bool>(pr.criteria.size()));
        for (std::size_t e = 0; e < files.size(); ++e) {
            const auto name = string_field(files[e], "ratings_csv[" + std::to_string(e) + "]");
            read_ratings_csv(base_dir / name, e, pr, pr.ratings, seen);
        }
    } else {
        parse_fail("missing field 'ratings'");
    }

    if (doc.contains("radii")) {
        const auto& rj = doc["radii"];
        if (!rj.is_array()) parse_fail("field 'radii' must be an array");
        RadiusGrid radii;
        for (std::size_t a = 0; a < rj.size(); ++a) {
            if (!rj[a].is_array()) parse_fail("radii[" + std::to_string(a) + "] must be an array");
            auto& row = radii.emplace_back();
            for (std::size_t c = 0; c < rj[a].size(); ++c) {
                row.push_back(
                    number(rj[a][c], "radii[" + std::to_string(a) + "][" + std::to_string(c) + "]"));
            }
        }
        pr.radius_override = std::move(radii);
    }

    return ProblemFile{std::move(pr), parse_config(doc)};
}

ProblemFile load_problem(const fs::path& path) {
    return parse_problem(read_file(path), path.parent_path());
}

namespace {

ojson problem_json(const ProblemFile& file, const json* ratings_csv) {
    const auto& pr = file.problem;
    ojson doc;
    doc["params"] = {{"m", pr.params.m()}, {"n", pr.params.n()}, {"o", pr.params.o()}};
    doc["alternatives"] = pr.alternatives;
    doc["criteria"] = pr.criteria;
    doc["experts"] = pr.experts;
    doc["weights"] = std::vector<double>(pr.weights.values().begin(), pr.weights.values().end());
    if (ratings_csv) {
        doc["ratings_csv"] = *ratings_csv;
    } else {
        ojson cube = ojson::array();
        for (const auto& row : pr.ratings) {
            ojson jr = ojson::array();
            for (const auto& cell : row) {
                ojson jc = ojson::array();
                for (const auto& t : cell) jc.push_back({t.mu, t.xi, t.nu});
                jr.push_back(std::move(jc));
            }
            cube.push_back(std::move(jr));
        }
        doc["ratings"] = std::move(cube);
    }
    if (pr.radius_override) doc["radii"] = *pr.radius_override;
    doc["constraint"] = pr.policy == ConstraintPolicy::Enforce ? "enforce" : "report";
    const auto& cfg = file.config;
    doc["config"] = {{"operator", std::string(to_string(cfg.op))},
                     {"zeta", cfg.zeta.zeta()},
                     {"eta", cfg.score.eta},
                     {"normalized", cfg.score.report_normalized},
                     {"radii", std::string(to_string(cfg.radii))}};
    return doc;
}

}  // namespace

std::string problem_to_json(const ProblemFile& file) {
    return problem_json(file, nullptr).dump(2) + "\n";
}

void save_problem(const ProblemFile& file, const fs::path& path, RatingsFormat format) {
    if (format == RatingsFormat::Inline) {
        write_file(path, problem_to_json(file));
        return;
    }
    const auto& pr = file.problem;
    json names = json::array();
    for (std::size_t e = 0; e < pr.experts.size(); ++e) {
        const auto name = path.stem().string() + "_" + pr.experts[e] + ".csv";
        std::string csv = "alternative,criterion,mu,xi,nu\n";
        for (std::size_t a = 0; a < pr.ratings.size(); ++a) {
            for (std::size_t c = 0; c < pr.ratings[a].size(); ++c) {
                const auto& t = pr.ratings[a][c][e];
                csv += pr.alternatives[a] + "," + pr.criteria[c] + "," + csv_number(t.mu) + "," +
                       csv_number(t.xi) + "," + csv_number(t.nu) + "\n";
            }
        }
        write_file(path.parent_path() / name, csv);
        names.push_back(name);
    }
    write_file(path, problem_json(file, &names).dump(2) + "\n");
}

void emit_report(const ReportDocument& doc, const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create '" + dir.string() + "': " + ec.message());
    write_file(dir / "report.txt", doc.text);
    write_file(dir / "report.json", doc.json);
    for (const auto& [op, csv] : doc.plot_csv) write_file(dir / ("scores_" + op + ".csv"), csv);
}

}  // namespace orbicular

#include "orbicular/scoring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbicular {

ScoreConfig make_score_config(double eta, bool report_normalized) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        std::ostringstream os;
        os << "eta = " << eta << " outside [0, 1]";
        throw Error(ErrorCode::InvalidEta, os.str());
    }
    return ScoreConfig{eta, report_normalized};
}

double score(const OrbicularValue& v, const ScoreConfig& cfg) {
    const auto& p = v.params();
    return 0.5 * (unit_pow(v.mu(), p.m()) - unit_pow(v.xi(), p.o()) - unit_pow(v.nu(), p.n()) +
                  v.r() * (2.0 * cfg.eta - 1.0));
}

double display_score(const OrbicularValue& v, const ScoreConfig& cfg) {
    const double raw = score(v, cfg);
    return cfg.report_normalized ? (raw + 1.0) / 2.0 : raw;
}

double accuracy(const OrbicularValue& v) { return power_sum(v.params(), v.grades()); }

std::weak_ordering compare(const OrbicularValue& a, const OrbicularValue& b,
                           const ScoreConfig& cfg) {
    require_same_params(a, b);
    const double sa = score(a, cfg);
    const double sb = score(b, cfg);
    if (sa > sb) return std::weak_ordering::greater;
    if (sa < sb) return std::weak_ordering::less;
    const double aa = accuracy(a);
    const double ab = accuracy(b);
    if (aa > ab) return std::weak_ordering::greater;
    if (aa < ab) return std::weak_ordering::less;
    return std::weak_ordering::equivalent;
}

std::vector<std::string> RankingResult::ordered_labels() const {
    std::vector<std::string> out;
    out.reserve(order.size());
    for (auto i : order) out.push_back(labels[i]);
    return out;
}

std::string RankingResult::ranking_line() const {
    std::string line;
    for (auto i : order) {
        if (!line.empty()) line += " > ";
        line += labels[i];
    }
    return line;
}

RankingResult rank(const std::vector<LabeledValue>& values, const ScoreConfig& cfg) {
    if (values.empty()) throw Error(ErrorCode::EmptyInput, "nothing to rank");
    RankingResult out;
    for (const auto& lv : values) {
        require_same_params(values.front().value, lv.value);
        out.labels.push_back(lv.label);
        out.aggregates.push_back(lv.value);
        out.scores.push_back(score(lv.value, cfg));
        out.display_scores.push_back(display_score(lv.value, cfg));
        out.accuracies.push_back(accuracy(lv.value));
    }
    out.order.resize(values.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(), [&](std::size_t i, std::size_t j) {
        if (out.scores[i] != out.scores[j]) return out.scores[i] > out.scores[j];
        return out.accuracies[i] > out.accuracies[j];
    });
    return out;
}

}  // namespace orbicular

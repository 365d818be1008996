#include "rdw/report.hpp"

#include <nlohmann/json.hpp>

#include "rdw/csv.hpp"
#include "rdw/psychometric.hpp"

namespace rdw {

using json = nlohmann::ordered_json;

std::string summary_csv(const std::vector<TrialSummary>& rows) {
    std::string out = "trial_id,group,target_gain,t1,max_gain_reached,physical_distance,response\n";
    for (const auto& r : rows) {
        out += std::to_string(r.trial_id);
        out += ',';
        out += to_string(r.group);
        out += ',';
        out += csv::num(r.target_gain);
        out += ',';
        if (r.t1_duration) out += csv::num(*r.t1_duration);
        out += ',';
        out += r.max_gain_reached ? '1' : '0';
        out += ',';
        out += csv::num(r.physical_distance);
        out += ',';
        out += r.response_greater ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string frame_csv(const TrialTrace& trace) {
    std::string out = "t,phys_x,phys_z,virtual_dist,deg,attention,gain\n";
    for (const auto& f : trace.frames) {
        out += csv::num(f.t);
        out += ',';
        out += csv::num(f.physical_pos.x);
        out += ',';
        out += csv::num(f.physical_pos.z);
        out += ',';
        out += csv::num(f.virtual_dist);
        out += ',';
        out += csv::num(f.deg);
        out += ',';
        out += csv::num(f.attention);
        out += ',';
        out += csv::num(f.gain);
        out += '\n';
    }
    return out;
}

std::string dataset_csv(const ResponseDataset& data) {
    std::string out = "gain,n,k\n";
    for (const auto& lv : data.levels) {
        out += csv::num(lv.gain);
        out += ',';
        out += std::to_string(lv.n);
        out += ',';
        out += std::to_string(lv.k);
        out += '\n';
    }
    return out;
}

std::string plot_csv(const ResponseDataset& data, const PsyFit& fit) {
    constexpr int kSamples = 200;
    constexpr double kLo = 0.5;
    constexpr double kHi = 1.5;

    std::string out = "gain,empirical_proportion,fitted_psi,marker\n";
    for (int i = 0; i < kSamples; ++i) {
        const double g = kLo + (kHi - kLo) * static_cast<double>(i) / (kSamples - 1);
        out += csv::num(g);
        out += ",,";
        out += csv::num(psychometric_value(g, fit.params));
        out += ",\n";
    }
    for (const auto& lv : data.levels) {
        out += csv::num(lv.gain);
        out += ',';
        out += csv::num(static_cast<double>(lv.k) / static_cast<double>(lv.n));
        out += ',';
        out += csv::num(psychometric_value(lv.gain, fit.params));
        out += ",\n";
    }
    const std::array<std::pair<const char*, double>, 3> markers{
        {{"ldt", fit.ldt}, {"pse", fit.pse}, {"udt", fit.udt}}};
    const std::array<double, 3> levels{0.25, 0.5, 0.75};
    for (std::size_t i = 0; i < markers.size(); ++i) {
        out += csv::num(markers[i].second);
        out += ",,";
        out += csv::num(levels[i]);
        out += ',';
        out += markers[i].first;
        out += '\n';
    }
    return out;
}

std::string table_csv(const std::vector<GroupReport>& reports) {
    std::string out =
        "group,ldt,pse,udt,aic,sse,pse_ci_low,pse_ci_high,n_trials,n_excluded\n";
    for (const auto& r : reports) {
        out += to_string(r.group);
        out += ',';
        out += csv::num(r.fit.ldt);
        out += ',';
        out += csv::num(r.fit.pse);
        out += ',';
        out += csv::num(r.fit.udt);
        out += ',';
        out += csv::num(r.fit.aic);
        out += ',';
        out += csv::num(r.fit.sse);
        out += ',';
        out += csv::num(r.fit.pse_ci[0]);
        out += ',';
        out += csv::num(r.fit.pse_ci[1]);
        out += ',';
        out += std::to_string(r.n_trials);
        out += ',';
        out += std::to_string(r.n_excluded);
        out += '\n';
    }
    return out;
}

std::string sequences_csv(const std::vector<std::vector<double>>& pool) {
    std::string out = "sequence,position,gain\n";
    for (std::size_t s = 0; s < pool.size(); ++s)
        for (std::size_t i = 0; i < pool[s].size(); ++i) {
            out += std::to_string(s);
            out += ',';
            out += std::to_string(i);
            out += ',';
            out += csv::num(pool[s][i]);
            out += '\n';
        }
    return out;
}

std::string fit_report_json(const PsyFit& fit) {
    json doc;
    doc["params"] = json{{"alpha", fit.params.alpha},
                         {"beta", fit.params.beta},
                         {"gamma", fit.params.gamma},
                         {"lambda", fit.params.lambda}};
    doc["nll"] = fit.nll;
    doc["aic"] = fit.aic;
    doc["sse"] = fit.sse;
    doc["pse"] = fit.pse;
    doc["ldt"] = fit.ldt;
    doc["udt"] = fit.udt;
    doc["pse_ci"] = json::array({fit.pse_ci[0], fit.pse_ci[1]});
    doc["converged"] = fit.converged;
    return doc.dump(2) + "\n";
}

std::string t1_stats_json(const T1Stats& stats, long excluded, long bounds_violations) {
    json doc;
    doc["count"] = stats.count;
    if (stats.count > 0) {
        doc["min"] = stats.min;
        doc["max"] = stats.max;
        doc["median"] = stats.median;
        doc["mean"] = stats.mean;
        doc["sd"] = stats.sd;
    } else {
        doc["min"] = nullptr;
        doc["max"] = nullptr;
        doc["median"] = nullptr;
        doc["mean"] = nullptr;
        doc["sd"] = nullptr;
    }
    doc["excluded"] = excluded;
    doc["bounds_violations"] = bounds_violations;
    return doc.dump(2) + "\n";
}

std::string chisq_json(const std::array<std::array<long, 2>, 2>& table,
                       const ChiSquareResult& result) {
    json doc;
    doc["table"] = json::array({json::array({table[0][0], table[0][1]}),
                                json::array({table[1][0], table[1][1]})});
    doc["statistic"] = result.statistic;
    doc["df"] = result.df;
    doc["n"] = result.total;
    return doc.dump(2) + "\n";
}

}  // namespace rdw

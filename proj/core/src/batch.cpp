#include "rdw/batch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "rdw/errors.hpp"
#include "rdw/rng.hpp"

namespace rdw {

BatchResult batch_run(const TrialPlan& plan, const Scenario& scenario,
                      const SyntheticResponder& responder, const AttentionParams& attention,
                      const GazeProvider& gaze_for_trial, const BatchOptions& options) {
    if (plan.gain_sequence.empty())
        throw std::invalid_argument("batch_run: empty gain sequence");
    if (!gaze_for_trial) throw std::invalid_argument("batch_run: missing gaze provider");
    {
        std::string why;
        if (!responder.ground_truth.valid(&why))
            throw std::invalid_argument("batch_run: responder " + why);
    }

    BatchResult result;
    result.summaries.reserve(plan.gain_sequence.size());
    std::map<double, ResponseLevel> levels;

    for (std::size_t i = 0; i < plan.gain_sequence.size(); ++i) {
        const double gain = plan.gain_sequence[i];
        const GazeScript gaze = gaze_for_trial(i, gain);
        TrialTrace trace = run_trial(scenario, plan.group, gain, gaze, attention, options.dt,
                                     options.record_frames || options.keep_traces);

        Rng rng(substream_seed(plan.seed, static_cast<std::uint64_t>(i)));
        const bool greater = responder.respond_greater(gain, uniform01(rng));

        TrialSummary summary;
        summary.trial_id = options.first_trial_id + static_cast<long>(i);
        summary.group = plan.group;
        summary.target_gain = gain;
        summary.t1_duration = trace.t1_duration;
        summary.max_gain_reached = trace.max_gain_reached;
        summary.physical_distance = trace.physical_distance;
        summary.response_greater = greater;
        summary.bounds_violation = trace.bounds_violation;
        result.summaries.push_back(summary);

        if (trace.max_gain_reached) {
            auto [it, inserted] = levels.try_emplace(gain, ResponseLevel{gain, 0, 0});
            ++it->second.n;
            if (greater) ++it->second.k;
        } else {
            ++result.excluded_count;
        }

        if (options.keep_traces) result.traces.push_back(std::move(trace));
    }

    result.dataset.levels.reserve(levels.size());
    for (auto& [gain, lv] : levels) result.dataset.levels.push_back(lv);
    return result;
}

T1Stats t1_statistics(const std::vector<TrialSummary>& summaries) {
    std::vector<double> t1s;
    for (const auto& s : summaries)
        if (s.t1_duration) t1s.push_back(*s.t1_duration);
    if (t1s.empty()) throw AnalysisError("t1_statistics: no trial recorded a rise time");

    std::sort(t1s.begin(), t1s.end());
    T1Stats stats;
    stats.count = t1s.size();
    stats.min = t1s.front();
    stats.max = t1s.back();
    const std::size_t m = t1s.size() / 2;
    stats.median = (t1s.size() % 2 == 1) ? t1s[m] : 0.5 * (t1s[m - 1] + t1s[m]);

    double sum = 0.0;
    for (double v : t1s) sum += v;
    stats.mean = sum / static_cast<double>(t1s.size());
    if (t1s.size() > 1) {
        double ss = 0.0;
        for (double v : t1s) ss += (v - stats.mean) * (v - stats.mean);
        stats.sd = std::sqrt(ss / static_cast<double>(t1s.size() - 1));
    }
    return stats;
}

}  // namespace rdw

#include "rdw/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "rdw/rng.hpp"
#include "rdw/sequence.hpp"

namespace rdw {

namespace {
// Domain separator so bootstrap streams never collide with trial streams.
constexpr std::uint64_t kBootstrapDomain = 0x9e3779b97f4a7c15ull;
}  // namespace

std::vector<TrialGroup> all_groups() {
    return {TrialGroup::WithDistractor, TrialGroup::WithoutDistractor, TrialGroup::Switch};
}

int group_index(TrialGroup group) {
    return static_cast<int>(group);
}

std::vector<TrialSummary> SimulationResult::all_summaries() const {
    std::vector<TrialSummary> merged;
    for (const auto& g : groups)
        merged.insert(merged.end(), g.summaries.begin(), g.summaries.end());
    std::sort(merged.begin(), merged.end(),
              [](const TrialSummary& a, const TrialSummary& b) { return a.trial_id < b.trial_id; });
    return merged;
}

SimulationResult simulate_all(const RunConfig& config, const std::vector<TrialGroup>& groups,
                              const TraceSink& sink) {
    if (groups.empty()) throw std::invalid_argument("simulate_all: no groups requested");

    const auto gains = config.plan.resolved_gains();
    SimulationResult result;
    result.sequence_pool.reserve(kSequencePoolSize);
    for (int i = 0; i < kSequencePoolSize; ++i)
        result.sequence_pool.push_back(
            shuffle_gains(sequence_seed(config.plan.seed, i), gains, config.plan.repetitions));

    // Canonical group order regardless of how the request was phrased.
    std::vector<TrialGroup> ordered;
    for (TrialGroup g : all_groups())
        if (std::find(groups.begin(), groups.end(), g) != groups.end()) ordered.push_back(g);
    for (TrialGroup g : ordered) result.groups.push_back(GroupResult{g});

    const GazeScript gaze = gaze_script_preset(config.plan.gaze_preset);
    const auto gaze_provider = [&gaze](std::size_t, double) { return gaze; };

    long next_trial_id = 0;
    for (int p = 0; p < config.plan.participants; ++p) {
        const std::uint64_t participant_seed =
            substream_seed(config.plan.seed, static_cast<std::uint64_t>(p));
        const auto& sequence = result.sequence_pool[p % kSequencePoolSize];

        for (std::size_t gi = 0; gi < ordered.size(); ++gi) {
            const TrialGroup group = ordered[gi];
            TrialPlan plan;
            plan.group = group;
            plan.gain_sequence = sequence;
            plan.seed = substream_seed(participant_seed,
                                       static_cast<std::uint64_t>(group_index(group)));

            BatchOptions options;
            options.dt = config.dt;
            options.first_trial_id = next_trial_id;
            options.keep_traces = static_cast<bool>(sink);
            options.record_frames = static_cast<bool>(sink);

            BatchResult batch = batch_run(plan, config.scenario, {config.responders.for_group(group)},
                                          config.attention, gaze_provider, options);
            next_trial_id += static_cast<long>(sequence.size());

            GroupResult& dst = result.groups[gi];
            dst.excluded += batch.excluded_count;
            dst.summaries.insert(dst.summaries.end(), batch.summaries.begin(),
                                 batch.summaries.end());
            dst.dataset.levels.insert(dst.dataset.levels.end(), batch.dataset.levels.begin(),
                                      batch.dataset.levels.end());

            if (sink)
                for (std::size_t i = 0; i < batch.summaries.size(); ++i)
                    sink(batch.summaries[i], batch.traces[i]);
        }
    }

    for (auto& g : result.groups)
        if (!g.dataset.levels.empty()) g.dataset.normalize();
    return result;
}

std::vector<GroupReport> fit_groups(const RunConfig& config, const SimulationResult& sim) {
    std::vector<GroupReport> reports;
    reports.reserve(sim.groups.size());
    for (const auto& g : sim.groups) {
        GroupReport report;
        report.group = g.group;
        report.n_trials = g.dataset.total_n();
        report.n_excluded = g.excluded;
        const std::uint64_t boot_seed = substream_seed(
            config.plan.seed ^ kBootstrapDomain, static_cast<std::uint64_t>(group_index(g.group)));
        report.fit = fit_with_ci(g.dataset, config.fit_options, boot_seed);
        reports.push_back(report);
    }
    return reports;
}

std::vector<GroupReport> pipeline_run(const RunConfig& config,
                                      const std::vector<TrialGroup>& groups) {
    const SimulationResult sim = simulate_all(config, groups);
    return fit_groups(config, sim);
}

}  // namespace rdw

#pragma once

#include <functional>
#include <vector>

#include "rdw/batch.hpp"
#include "rdw/config.hpp"
#include "rdw/fit.hpp"

namespace rdw {

// All three conditions in canonical run order.
std::vector<TrialGroup> all_groups();
int group_index(TrialGroup group);

struct GroupResult {
    TrialGroup group = TrialGroup::WithDistractor;
    ResponseDataset dataset;  // included trials, merged over participants
    std::vector<TrialSummary> summaries;
    long excluded = 0;
};

struct SimulationResult {
    std::vector<GroupResult> groups;                  // canonical order, filtered
    std::vector<std::vector<double>> sequence_pool;   // the stored gain sequences

    std::vector<TrialSummary> all_summaries() const;  // merged, by trial id
};

// Callback receiving each finished trial's trace (frames included) as it
// completes, so frame logs stream to disk instead of accumulating.
using TraceSink = std::function<void(const TrialSummary&, const TrialTrace&)>;

// Run the full experiment: participants x requested groups x the gain
// sequence. Participant p replays stored sequence p mod pool size; responder
// streams chain master seed -> participant -> group -> trial. Trial ids are
// globally sequential in run order.
SimulationResult simulate_all(const RunConfig& config, const std::vector<TrialGroup>& groups,
                              const TraceSink& sink = {});

struct GroupReport {
    TrialGroup group = TrialGroup::WithDistractor;
    PsyFit fit;
    long n_trials = 0;  // included in the fit
    long n_excluded = 0;
};

// Fit each group's dataset with the config's fit options, bootstrap CI
// included. Bootstrap seeds derive from the master seed and group identity.
std::vector<GroupReport> fit_groups(const RunConfig& config, const SimulationResult& sim);

// simulate_all + fit_groups.
std::vector<GroupReport> pipeline_run(const RunConfig& config,
                                      const std::vector<TrialGroup>& groups);

}  // namespace rdw

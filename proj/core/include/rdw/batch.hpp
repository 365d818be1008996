#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rdw/dataset.hpp"
#include "rdw/psychometric.hpp"
#include "rdw/trial.hpp"

namespace rdw {

// One block of trials: a single condition run through an ordered gain
// sequence. The seed feeds the responder's per-trial decision streams.
struct TrialPlan {
    TrialGroup group = TrialGroup::WithDistractor;
    std::vector<double> gain_sequence;
    std::uint64_t seed = 0;
};

// Stochastic stand-in for a participant: answers the "walked faster than
// normal?" question from a ground-truth psychometric curve.
struct SyntheticResponder {
    PsyParams ground_truth;

    bool respond_greater(double gain, double u) const {
        return u < psychometric_value(gain, ground_truth);
    }
};

struct TrialSummary {
    long trial_id = 0;
    TrialGroup group = TrialGroup::WithDistractor;
    double target_gain = 1.0;
    std::optional<double> t1_duration;  // dynamic trials that saturated only
    bool max_gain_reached = false;
    double physical_distance = 0.0;
    bool response_greater = false;
    bool bounds_violation = false;
};

struct BatchResult {
    ResponseDataset dataset;  // included trials aggregated per gain level
    std::vector<TrialSummary> summaries;
    std::vector<TrialTrace> traces;  // parallel to summaries when kept
    long excluded_count = 0;         // trials whose gain never reached target
};

struct BatchOptions {
    double dt = 1.0 / 90.0;
    bool keep_traces = false;
    bool record_frames = false;
    long first_trial_id = 0;
};

// Gaze script used for the trial at the given position in the sequence.
using GazeProvider = std::function<GazeScript(std::size_t trial_index, double target_gain)>;

// Run every trial of the plan. Trials whose controller never reached the
// target gain are excluded from the aggregated dataset (but kept in the
// summaries) — their stimulus was not delivered as intended.
BatchResult batch_run(const TrialPlan& plan, const Scenario& scenario,
                      const SyntheticResponder& responder, const AttentionParams& attention,
                      const GazeProvider& gaze_for_trial, const BatchOptions& options = {});

struct T1Stats {
    std::size_t count = 0;
    double min = 0.0;
    double max = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double sd = 0.0;
};

// Distribution of attention rise times over trials that saturated.
// Throws AnalysisError when no trial carries a rise time.
T1Stats t1_statistics(const std::vector<TrialSummary>& summaries);

}  // namespace rdw

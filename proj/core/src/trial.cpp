#include "rdw/trial.hpp"

#include <stdexcept>

#include "rdw/errors.hpp"

namespace rdw {

namespace {
constexpr double kNoDistractorDeg = 180.0;  // recorded while no distractor exists
}

std::string to_string(TrialGroup group) {
    switch (group) {
        case TrialGroup::WithDistractor: return "w_dst";
        case TrialGroup::WithoutDistractor: return "wo_dst";
        case TrialGroup::Switch: return "switch";
    }
    return "?";
}

TrialGroup trial_group_from_string(const std::string& s) {
    if (s == "w_dst") return TrialGroup::WithDistractor;
    if (s == "wo_dst") return TrialGroup::WithoutDistractor;
    if (s == "switch") return TrialGroup::Switch;
    throw ConfigError("unknown trial group '" + s + "' (expected w_dst, wo_dst or switch)");
}

GainProfileMode profile_mode(TrialGroup group) {
    switch (group) {
        case TrialGroup::WithDistractor: return GainProfileMode::Dynamic;
        case TrialGroup::WithoutDistractor: return GainProfileMode::Scheduled;
        case TrialGroup::Switch: return GainProfileMode::Switch;
    }
    throw ConfigError("profile_mode: bad group");
}

TrialTrace run_trial(const Scenario& scenario, TrialGroup group, double target_gain,
                     const GazeScript& gaze, const AttentionParams& params, double dt,
                     bool record_frames) {
    std::string why;
    if (!scenario.valid(&why)) throw ConfigError("scenario: " + why);
    if (!params.valid(&why)) throw ConfigError("attention params: " + why);
    if (!gaze.valid(&why)) throw ConfigError("gaze script: " + why);
    if (!(dt > 0.0)) throw std::invalid_argument("run_trial: dt must be > 0");
    if (!(target_gain > 0.0)) throw std::invalid_argument("run_trial: target gain must be > 0");

    const GainProfileMode mode = profile_mode(group);
    const double trigger_at = scenario.virtual_path_length - scenario.trigger_lead;

    TrialTrace trace;
    AttentionState att;
    GainController ctrl;
    ctrl.base_gain = 1.0;
    ctrl.target_gain = target_gain;

    // Time and virtual progress are derived from the frame index rather than
    // accumulated, so boundary comparisons (trigger, envelope windows, trial
    // end) don't drift with per-frame rounding over hundreds of steps.
    long frame = 0;
    double t = 0.0;
    double virtual_dist = 0.0;
    const double virtual_step = scenario.walk_speed * dt;
    Vec2 pos = scenario.start_position;
    bool triggered = false;
    double trigger_time = 0.0;

    if (record_frames) {
        const std::size_t est = static_cast<std::size_t>(
            scenario.virtual_path_length / (scenario.walk_speed * dt)) + 2;
        trace.frames.reserve(est);
    }

    while (virtual_dist < scenario.virtual_path_length) {
        if (!triggered && virtual_dist >= trigger_at) {
            triggered = true;
            trigger_time = t;
            trace.trigger_time = t;
            if (mode == GainProfileMode::Dynamic) ctrl.trigger();
        }

        double deg = kNoDistractorDeg;
        double gain = 1.0;
        if (mode == GainProfileMode::Dynamic) {
            if (triggered) {
                deg = gaze.eval(t - trigger_time);
                att = attention_step(att, deg, dt, params);
            }
            ctrl.step(att.attention, dt, params);
            gain = ctrl.current_gain;
        } else if (triggered) {
            gain = scheduled_gain(t - trigger_time, mode, 1.0, target_gain);
        }

        const double physical_step = virtual_step / gain;
        pos.z += physical_step;
        trace.physical_distance += physical_step;
        ++frame;
        virtual_dist = static_cast<double>(frame) * virtual_step;
        t = static_cast<double>(frame) * dt;

        if (pos.x < 0.0 || pos.x > scenario.bounds_width || pos.z < 0.0 ||
            pos.z > scenario.bounds_depth) {
            trace.bounds_violation = true;
        }
        if (record_frames) {
            trace.frames.push_back({t, pos, virtual_dist, deg, att.attention, gain});
        }
    }

    trace.final_virtual_dist = virtual_dist;
    if (mode == GainProfileMode::Dynamic) {
        trace.t1_duration = ctrl.t1_duration;
        trace.max_gain_reached = ctrl.reached_max;
    } else {
        // Time-scheduled profiles always deliver the full target gain.
        trace.max_gain_reached = triggered;
    }
    return trace;
}

}  // namespace rdw

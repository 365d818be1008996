#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rdw/attention.hpp"
#include "rdw/gain.hpp"
#include "rdw/gaze_script.hpp"
#include "rdw/scenario.hpp"

namespace rdw {

// Experimental condition of a trial.
enum class TrialGroup { WithDistractor, WithoutDistractor, Switch };

std::string to_string(TrialGroup group);                 // "w_dst" / "wo_dst" / "switch"
TrialGroup trial_group_from_string(const std::string&);  // throws ConfigError

GainProfileMode profile_mode(TrialGroup group);

struct TrialFrame {
    double t = 0.0;
    Vec2 physical_pos{};
    double virtual_dist = 0.0;
    double deg = 0.0;
    double attention = 0.0;
    double gain = 0.0;
};

struct TrialTrace {
    std::vector<TrialFrame> frames;       // empty unless frames were recorded
    std::optional<double> t1_duration;    // Ascent length; dynamic trials only
    bool max_gain_reached = false;
    double physical_distance = 0.0;       // m actually walked
    double final_virtual_dist = 0.0;
    std::optional<double> trigger_time;   // s; absent if the trigger never fired
    bool bounds_violation = false;        // walked outside the physical rect
};

// Fixed-timestep simulation of one trial. The walker advances at constant
// speed along the virtual path with base gain 1.0; at the trigger the group's
// gain profile starts (attention-driven for WithDistractor, fed by the gaze
// script; time-scheduled otherwise). Ends when the virtual path is covered.
// A bounds exit is flagged on the trace, not fatal.
TrialTrace run_trial(const Scenario& scenario, TrialGroup group, double target_gain,
                     const GazeScript& gaze, const AttentionParams& params, double dt,
                     bool record_frames = true);

}  // namespace rdw

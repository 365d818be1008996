#pragma once

#include <optional>

#include "rdw/attention.hpp"

namespace rdw {

enum class GainPhase { Idle, Ascent, Hold, Descent };

// How the per-trial gain profile is produced.
//   Dynamic:   attention-driven controller (GainController below).
//   Scheduled: fixed-time replay of the canonical envelope (scheduled_gain).
//   Switch:    hard switch to the target at the trigger, hard switch back.
enum class GainProfileMode { Dynamic, Scheduled, Switch };

// Phase machine for one dynamic-gain episode. Transitions follow
// Idle -> Ascent -> Hold -> Descent -> Idle only. During Ascent the gain is
// the attention-weighted interpolation between base and target; Hold pins the
// target; Descent ramps back to base on a timer.
struct GainController {
    GainPhase phase = GainPhase::Idle;
    double base_gain = 1.0;
    double target_gain = 1.0;
    double current_gain = 1.0;
    // Time in the current Hold/Descent phase, derived from a step count so
    // the phase lengths don't drift with accumulated per-frame rounding.
    double phase_timer = 0.0;
    long phase_steps = 0;
    double t1_elapsed = 0.0;     // time spent in Ascent
    double hold_duration = 0.300;
    double descent_duration = 0.050;

    bool reached_max = false;            // attention hit the ceiling this episode
    std::optional<double> t1_duration;   // Ascent length, set on entering Hold

    // Distractor trigger: starts the episode. No-op outside Idle.
    void trigger();

    // One fixed-timestep update given the current attention level.
    void step(double attention, double dt, const AttentionParams& params);
};

// Gain at t seconds after the trigger for the two control profiles.
// Scheduled replays the canonical envelope: linear rise over 0.200 s, hold
// 0.300 s, linear fall over 0.050 s. Switch returns the target from t=0
// through the end of the hold window (0.500 s), then base. Outside the
// envelope both return base.
double scheduled_gain(double t_since_trigger, GainProfileMode mode, double base,
                      double target);

// Virtual displacement produced by a physical displacement under gain g.
double apply_translation_gain(double physical_delta, double g);

}  // namespace rdw

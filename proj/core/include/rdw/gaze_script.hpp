#pragma once

#include <string>
#include <vector>

namespace rdw {

// One linearly interpolated leg of a scripted gaze-angle trace.
struct GazeSegment {
    double duration = 0.0;  // seconds, > 0
    double deg_start = 0.0;
    double deg_end = 0.0;
};

// Deterministic stand-in for human gaze: a piecewise-linear gaze-angle trace,
// evaluated relative to the distractor trigger. Before t=0 the first value
// holds; past the last segment the final value holds.
struct GazeScript {
    std::vector<GazeSegment> segments;

    double eval(double t) const;
    double total_duration() const;
    bool valid(std::string* why = nullptr) const;
};

// Canonical scripts.
GazeScript instant_focus();                              // deg = 0 throughout
GazeScript linear_turn(double duration);                 // 40 deg -> 0 over `duration`, then hold
GazeScript glance(double on, double off, int cycles);    // alternate 0 deg / 90 deg
GazeScript never_look();                                 // deg = 90 throughout

// Preset by name, as used in config files: "instant_focus",
// "linear_turn:<duration>", "glance:<on>,<off>,<cycles>", "never_look".
GazeScript gaze_script_preset(const std::string& name);

}  // namespace rdw

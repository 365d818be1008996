#pragma once

#include <string>

namespace rdw {

// Parameters of the attention-degree accumulator. Attention rises while the
// gaze angle is inside the focus cone and drains linearly outside it.
struct AttentionParams {
    double accumulation_rate = 5000.0;  // attention-units/s at perfect alignment
    double decay_rate = 2000.0;         // attention-units/s while looking away
    double gaussian_width_deg = 3.1;    // falloff width of the accumulation term
    double focus_threshold_deg = 15.0;  // cone half-angle separating the branches
    double max_attention = 100.0;       // accumulator ceiling
    double onset_hold = 0.033;          // constant-attention window at focus onset, s

    bool valid(std::string* why = nullptr) const;
};

struct AttentionState {
    double attention = 0.0;     // clamped to [0, max_attention]
    double time_in_hold = 0.0;  // elapsed portion of the current onset hold
};

// One fixed-timestep update of the accumulator.
//   deg <  threshold: attention += accumulation_rate * exp(-deg^2 / (2 w^2)) * dt,
//                     except inside the onset-hold window where it stays put;
//   deg >= threshold: attention -= decay_rate * dt, and the hold window rearms
//                     so the next focus onset holds again.
// The result is clamped to [0, max_attention].
AttentionState attention_step(AttentionState state, double deg, double dt,
                              const AttentionParams& params);

// Time for attention to saturate under perfect alignment from the moment of
// focus onset: onset_hold + max_attention / accumulation_rate. 0.053 s at the
// defaults.
double fast_focus_t1(const AttentionParams& params);

}  // namespace rdw

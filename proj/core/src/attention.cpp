#include "rdw/attention.hpp"

#include <cmath>
#include <stdexcept>

namespace rdw {

bool AttentionParams::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!(accumulation_rate > 0.0)) return fail("accumulation_rate must be > 0");
    if (!(decay_rate > 0.0)) return fail("decay_rate must be > 0");
    if (!(gaussian_width_deg > 0.0)) return fail("gaussian_width_deg must be > 0");
    if (!(focus_threshold_deg > 0.0 && focus_threshold_deg <= 90.0))
        return fail("focus_threshold_deg must be in (0, 90]");
    if (!(max_attention > 0.0)) return fail("max_attention must be > 0");
    if (!(onset_hold >= 0.0)) return fail("onset_hold must be >= 0");
    return true;
}

AttentionState attention_step(AttentionState state, double deg, double dt,
                              const AttentionParams& params) {
    if (!(dt > 0.0)) throw std::invalid_argument("attention_step: dt must be > 0");

    if (deg < params.focus_threshold_deg) {
        if (state.time_in_hold < params.onset_hold) {
            // Focus-onset adaptation: attention stays constant.
            state.time_in_hold += dt;
        } else {
            const double w = params.gaussian_width_deg;
            state.attention +=
                params.accumulation_rate * std::exp(-(deg * deg) / (2.0 * w * w)) * dt;
        }
    } else {
        state.attention -= params.decay_rate * dt;
        state.time_in_hold = 0.0;  // next focus onset holds again
    }

    if (state.attention < 0.0) state.attention = 0.0;
    if (state.attention > params.max_attention) state.attention = params.max_attention;
    return state;
}

double fast_focus_t1(const AttentionParams& params) {
    return params.onset_hold + params.max_attention / params.accumulation_rate;
}

}  // namespace rdw

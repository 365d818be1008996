#include "rdw/gain.hpp"

#include <stdexcept>

#include "rdw/errors.hpp"

namespace rdw {

namespace {
constexpr double kEnvelopeRise = 0.200;
constexpr double kEnvelopeHold = 0.300;
constexpr double kEnvelopeFall = 0.050;
}  // namespace

void GainController::trigger() {
    if (phase != GainPhase::Idle) return;
    phase = GainPhase::Ascent;
    t1_elapsed = 0.0;
    phase_timer = 0.0;
    phase_steps = 0;
}

void GainController::step(double attention, double dt, const AttentionParams& params) {
    if (!(dt > 0.0)) throw std::invalid_argument("GainController::step: dt must be > 0");

    switch (phase) {
        case GainPhase::Idle:
            current_gain = base_gain;
            break;
        case GainPhase::Ascent: {
            t1_elapsed += dt;
            const double frac = attention / params.max_attention;
            current_gain = base_gain + (target_gain - base_gain) * frac;
            if (attention >= params.max_attention) {
                t1_duration = t1_elapsed;
                reached_max = true;
                phase = GainPhase::Hold;
                phase_timer = 0.0;
                phase_steps = 0;
            }
            break;
        }
        case GainPhase::Hold:
            phase_timer = static_cast<double>(++phase_steps) * dt;
            current_gain = target_gain;
            if (phase_timer >= hold_duration) {
                phase = GainPhase::Descent;
                phase_timer = 0.0;
                phase_steps = 0;
            }
            break;
        case GainPhase::Descent: {
            phase_timer = static_cast<double>(++phase_steps) * dt;
            double frac = phase_timer / descent_duration;
            if (frac > 1.0) frac = 1.0;
            current_gain = target_gain + (base_gain - target_gain) * frac;
            if (phase_timer >= descent_duration) {
                phase = GainPhase::Idle;
                current_gain = base_gain;
            }
            break;
        }
    }
}

double scheduled_gain(double t, GainProfileMode mode, double base, double target) {
    switch (mode) {
        case GainProfileMode::Scheduled:
            if (t < 0.0) return base;
            if (t < kEnvelopeRise) return base + (target - base) * (t / kEnvelopeRise);
            if (t < kEnvelopeRise + kEnvelopeHold) return target;
            if (t < kEnvelopeRise + kEnvelopeHold + kEnvelopeFall) {
                const double frac = (t - kEnvelopeRise - kEnvelopeHold) / kEnvelopeFall;
                return target + (base - target) * frac;
            }
            return base;
        case GainProfileMode::Switch:
            return (t >= 0.0 && t < kEnvelopeRise + kEnvelopeHold) ? target : base;
        case GainProfileMode::Dynamic:
            break;
    }
    throw ConfigError("scheduled_gain: mode must be Scheduled or Switch");
}

double apply_translation_gain(double physical_delta, double g) {
    if (!(g > 0.0)) throw std::invalid_argument("apply_translation_gain: gain must be > 0");
    return physical_delta * g;
}

}  // namespace rdw

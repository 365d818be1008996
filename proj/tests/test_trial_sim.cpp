#include <doctest.h>

#include <cmath>
#include <vector>

#include "rdw/errors.hpp"
#include "rdw/gain.hpp"
#include "rdw/trial.hpp"

using namespace rdw;

namespace {
constexpr double kDt = 1.0 / 90.0;

TrialTrace run_default(TrialGroup group, double target, const GazeScript& gaze,
                       bool frames = true) {
    return run_trial(Scenario{}, group, target, gaze, AttentionParams{}, kDt, frames);
}
}  // namespace

TEST_CASE("group names round-trip and map to the right profile") {
    for (TrialGroup g :
         {TrialGroup::WithDistractor, TrialGroup::WithoutDistractor, TrialGroup::Switch})
        CHECK(trial_group_from_string(to_string(g)) == g);
    CHECK_THROWS_AS(trial_group_from_string("with_dst"), ConfigError);
    CHECK(profile_mode(TrialGroup::WithDistractor) == GainProfileMode::Dynamic);
    CHECK(profile_mode(TrialGroup::WithoutDistractor) == GainProfileMode::Scheduled);
    CHECK(profile_mode(TrialGroup::Switch) == GainProfileMode::Switch);
}

TEST_CASE("trigger fires once at the lead distance") {
    const auto trace = run_default(TrialGroup::WithDistractor, 1.5, instant_focus());
    REQUIRE(trace.trigger_time.has_value());
    // 6.5 m at 1 m/s, within one frame
    CHECK(std::abs(*trace.trigger_time - 6.5) <= kDt + 1e-12);
}

TEST_CASE("instant focus saturates the controller in closed-form time") {
    const auto trace = run_default(TrialGroup::WithDistractor, 1.5, instant_focus());
    REQUIRE(trace.t1_duration.has_value());
    CHECK(std::abs(*trace.t1_duration - 0.053) <= kDt);  // onset hold + ceiling/rate
    CHECK(trace.max_gain_reached);
    CHECK_FALSE(trace.bounds_violation);
}

TEST_CASE("a gaze that never enters the cone leaves the gain at base") {
    const auto trace = run_default(TrialGroup::WithDistractor, 1.5, never_look());
    CHECK_FALSE(trace.max_gain_reached);
    CHECK_FALSE(trace.t1_duration.has_value());
    for (const auto& f : trace.frames) CHECK(f.gain == 1.0);
    CHECK(std::abs(trace.physical_distance - 8.0) <= kDt + 1e-9);
}

TEST_CASE("trial ends when the virtual path is covered") {
    for (TrialGroup g :
         {TrialGroup::WithDistractor, TrialGroup::WithoutDistractor, TrialGroup::Switch}) {
        const auto trace = run_default(g, 0.5, instant_focus());
        CHECK(trace.final_virtual_dist >= 8.0);
        CHECK(trace.final_virtual_dist <= 8.0 + kDt + 1e-9);
    }
}

TEST_CASE("switch trial at gain 0.5 walks exactly half a meter extra") {
    // 45 frames (0.5 s) at double physical speed add 45 * dt = 0.5 m.
    const auto trace = run_default(TrialGroup::Switch, 0.5, instant_focus());
    CHECK(trace.physical_distance == doctest::Approx(8.5).epsilon(1e-9));
}

TEST_CASE("scheduled trials match an independent envelope integration") {
    for (double target : {0.5, 1.5}) {
        for (TrialGroup group : {TrialGroup::WithoutDistractor, TrialGroup::Switch}) {
            const auto trace = run_default(group, target, instant_focus());
            REQUIRE(trace.trigger_time.has_value());

            // same discrete sum, written directly against the envelope
            double expected = 0.0;
            long trig = -1;
            for (long k = 0; static_cast<double>(k) * kDt < 8.0; ++k) {
                const double virt = static_cast<double>(k) * kDt;
                if (trig < 0 && virt >= 6.5) trig = k;
                double gain = 1.0;
                if (trig >= 0)
                    gain = scheduled_gain(
                        static_cast<double>(k) * kDt - static_cast<double>(trig) * kDt,
                        profile_mode(group), 1.0, target);
                expected += kDt / gain;
            }
            CHECK(trace.physical_distance == doctest::Approx(expected).epsilon(1e-9));
        }
    }
}

TEST_CASE("per-frame conservation: physical step times gain equals virtual step") {
    const auto trace = run_default(TrialGroup::WithDistractor, 1.3, instant_focus());
    REQUIRE(trace.frames.size() > 100);
    double prev_z = Scenario{}.start_position.z;
    double prev_virt = 0.0;
    double prev_t = 0.0;
    for (const auto& f : trace.frames) {
        const double phys_step = f.physical_pos.z - prev_z;
        const double virt_step = f.virtual_dist - prev_virt;
        CHECK(phys_step * f.gain == doctest::Approx(virt_step).epsilon(1e-9));
        CHECK(f.t - prev_t == doctest::Approx(kDt).epsilon(1e-9));
        CHECK(f.virtual_dist >= prev_virt);
        prev_z = f.physical_pos.z;
        prev_virt = f.virtual_dist;
        prev_t = f.t;
    }
}

TEST_CASE("dynamic gain stays between base and target on every frame") {
    for (double target : {0.5, 0.9, 1.5}) {
        const auto trace = run_default(TrialGroup::WithDistractor, target, instant_focus());
        const double lo = std::min(1.0, target) - 1e-12;
        const double hi = std::max(1.0, target) + 1e-12;
        for (const auto& f : trace.frames) {
            CHECK(f.gain >= lo);
            CHECK(f.gain <= hi);
        }
    }
}

TEST_CASE("repeated runs are bit-identical") {
    const auto a = run_default(TrialGroup::WithDistractor, 1.2, linear_turn(0.15));
    const auto b = run_default(TrialGroup::WithDistractor, 1.2, linear_turn(0.15));
    REQUIRE(a.frames.size() == b.frames.size());
    for (std::size_t i = 0; i < a.frames.size(); ++i) {
        CHECK(a.frames[i].physical_pos.z == b.frames[i].physical_pos.z);
        CHECK(a.frames[i].attention == b.frames[i].attention);
        CHECK(a.frames[i].gain == b.frames[i].gain);
    }
    CHECK(a.physical_distance == b.physical_distance);
    CHECK(a.t1_duration == b.t1_duration);
}

TEST_CASE("leaving the room is flagged but not fatal") {
    Scenario sc;
    sc.bounds_depth = 5.0;  // too short for the walk
    const auto trace =
        run_trial(sc, TrialGroup::WithoutDistractor, 1.0, instant_focus(), AttentionParams{}, kDt);
    CHECK(trace.bounds_violation);
    CHECK(trace.final_virtual_dist >= 8.0);  // trial still completed
}

TEST_CASE("precondition checks") {
    CHECK_THROWS_AS(run_default(TrialGroup::Switch, 0.0, instant_focus()),
                    std::invalid_argument);
    CHECK_THROWS_AS(run_trial(Scenario{}, TrialGroup::Switch, 1.0, instant_focus(),
                              AttentionParams{}, 0.0),
                    std::invalid_argument);
    Scenario bad;
    bad.walk_speed = 0.0;
    CHECK_THROWS_AS(
        run_trial(bad, TrialGroup::Switch, 1.0, instant_focus(), AttentionParams{}, kDt),
        ConfigError);
    GazeScript bad_gaze{{{-1.0, 0.0, 0.0}}};
    CHECK_THROWS_AS(
        run_trial(Scenario{}, TrialGroup::WithDistractor, 1.0, bad_gaze, AttentionParams{}, kDt),
        ConfigError);
}

TEST_CASE("frame recording is optional") {
    const auto trace = run_default(TrialGroup::Switch, 1.5, instant_focus(), false);
    CHECK(trace.frames.empty());
    CHECK(trace.physical_distance > 0.0);
}

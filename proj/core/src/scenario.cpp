#include "rdw/scenario.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdw {

bool Scenario::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!(bounds_width > 0.0 && bounds_depth > 0.0))
        return fail("physical bounds must be positive");
    if (!(trigger_lead > 0.0)) return fail("trigger_lead must be > 0");
    if (!(virtual_path_length > trigger_lead))
        return fail("virtual_path_length must exceed trigger_lead");
    if (!(walk_speed > 0.0)) return fail("walk_speed must be > 0");
    if (!(distractor_speed > 0.0)) return fail("distractor_speed must be > 0");
    return true;
}

Vec3 distractor_centroid(const Scenario& scenario, double spawn_z, double t_since_trigger) {
    if (scenario.distractor_side == DistractorSide::None) {
        throw std::invalid_argument("distractor_centroid: scenario has no distractor");
    }
    if (t_since_trigger < 0.0) t_since_trigger = 0.0;

    const double center_x = scenario.start_position.x;  // path line
    const double spawn_x =
        scenario.distractor_side == DistractorSide::Left ? 0.0 : scenario.bounds_width;
    const double travel = std::min(t_since_trigger * scenario.distractor_speed,
                                   std::abs(center_x - spawn_x));
    const double dir = center_x >= spawn_x ? 1.0 : -1.0;
    return {spawn_x + dir * travel, 1.0, spawn_z};
}

}  // namespace rdw

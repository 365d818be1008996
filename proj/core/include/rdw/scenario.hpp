#pragma once

#include <string>

#include "rdw/geometry.hpp"

namespace rdw {

enum class DistractorSide { Left, Right, None };

// Trial geometry: a straight virtual path of fixed length walked inside an
// obstacle-free physical rectangle. The distractor trigger fires when virtual
// progress reaches virtual_path_length - trigger_lead.
struct Scenario {
    double bounds_width = 10.0;        // physical x extent, m
    double bounds_depth = 10.0;        // physical z extent, m
    double virtual_path_length = 8.0;  // m
    double trigger_lead = 1.5;         // m ahead of the path end
    double walk_speed = 1.0;           // virtual m/s
    DistractorSide distractor_side = DistractorSide::Left;
    double distractor_speed = 1.5;     // m/s toward the path center
    Vec2 start_position{5.0, 1.0};     // physical start, heading +z

    bool valid(std::string* why = nullptr) const;
};

// Distractor centroid t seconds after it spawns. It appears at the lateral
// edge at the trigger-zone depth and moves at constant speed toward the path
// center line, stopping there. Centroid height is fixed at 1.0 m.
Vec3 distractor_centroid(const Scenario& scenario, double spawn_z, double t_since_trigger);

}  // namespace rdw

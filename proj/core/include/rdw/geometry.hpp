#pragma once

#include <cmath>
#include <stdexcept>

namespace rdw {

// Physical-plane coordinates: x across the room, z along the walking axis.
struct Vec2 {
    double x = 0.0;
    double z = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
};

// User viewpoint: planar position plus eye height, looking along
// view_direction (unit vector).
struct Pose {
    Vec2 position{};
    Vec3 view_direction{0.0, 0.0, 1.0};
    double height = 1.6;

    Vec3 eye() const { return {position.x, height, position.z}; }
};

constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;

// 3D angle in degrees between the view ray and the eye-to-centroid vector.
// Head direction stands in for gaze.
inline double gaze_angle_deg(const Pose& pose, const Vec3& centroid) {
    const Vec3 view = pose.view_direction;
    const double view_norm = view.norm();
    if (std::abs(view_norm - 1.0) > 1e-9) {
        throw std::invalid_argument("gaze_angle_deg: view_direction must be a unit vector");
    }
    const Vec3 to_centroid = centroid - pose.eye();
    const double dist = to_centroid.norm();
    if (dist < 1e-12) {
        throw std::invalid_argument("gaze_angle_deg: distractor centroid coincides with the eye");
    }
    double c = view.dot(to_centroid) / (view_norm * dist);
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c) * kRadToDeg;
}

}  // namespace rdw

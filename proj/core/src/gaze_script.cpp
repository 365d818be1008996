#include "rdw/gaze_script.hpp"

#include <cstdlib>
#include <sstream>

#include "rdw/errors.hpp"

namespace rdw {

double GazeScript::eval(double t) const {
    if (segments.empty()) return 180.0;  // no script: nothing to look at
    if (t <= 0.0) return segments.front().deg_start;
    double start = 0.0;
    for (const auto& seg : segments) {
        if (t < start + seg.duration) {
            const double frac = (t - start) / seg.duration;
            return seg.deg_start + (seg.deg_end - seg.deg_start) * frac;
        }
        start += seg.duration;
    }
    return segments.back().deg_end;
}

double GazeScript::total_duration() const {
    double total = 0.0;
    for (const auto& seg : segments) total += seg.duration;
    return total;
}

bool GazeScript::valid(std::string* why) const {
    for (const auto& seg : segments) {
        if (!(seg.duration > 0.0)) {
            if (why) *why = "gaze segment durations must be > 0";
            return false;
        }
        for (double deg : {seg.deg_start, seg.deg_end}) {
            if (!(deg >= 0.0 && deg <= 180.0)) {
                if (why) *why = "gaze angles must be in [0, 180]";
                return false;
            }
        }
    }
    return true;
}

GazeScript instant_focus() {
    return GazeScript{{{1.0, 0.0, 0.0}}};
}

GazeScript linear_turn(double duration) {
    if (!(duration > 0.0)) throw ConfigError("linear_turn: duration must be > 0");
    return GazeScript{{{duration, 40.0, 0.0}}};  // holds 0 deg past the ramp
}

GazeScript glance(double on, double off, int cycles) {
    if (!(on > 0.0 && off > 0.0)) throw ConfigError("glance: on/off durations must be > 0");
    if (cycles < 1) throw ConfigError("glance: cycles must be >= 1");
    GazeScript script;
    for (int i = 0; i < cycles; ++i) {
        script.segments.push_back({on, 0.0, 0.0});
        script.segments.push_back({off, 90.0, 90.0});
    }
    return script;
}

GazeScript never_look() {
    return GazeScript{{{1.0, 90.0, 90.0}}};
}

GazeScript gaze_script_preset(const std::string& name) {
    const auto colon = name.find(':');
    const std::string kind = name.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);

    auto parse_numbers = [&](std::size_t expected) {
        std::vector<double> values;
        std::stringstream ss(args);
        std::string token;
        while (std::getline(ss, token, ',')) {
            char* end = nullptr;
            const double v = std::strtod(token.c_str(), &end);
            if (end == token.c_str() || *end != '\0') {
                throw ConfigError("gaze preset '" + name + "': bad numeric argument '" + token + "'");
            }
            values.push_back(v);
        }
        if (values.size() != expected) {
            throw ConfigError("gaze preset '" + name + "': expected " +
                              std::to_string(expected) + " argument(s)");
        }
        return values;
    };

    if (kind == "instant_focus") return instant_focus();
    if (kind == "never_look") return never_look();
    if (kind == "linear_turn") return linear_turn(parse_numbers(1)[0]);
    if (kind == "glance") {
        const auto v = parse_numbers(3);
        return glance(v[0], v[1], static_cast<int>(v[2]));
    }
    throw ConfigError("unknown gaze preset '" + name + "'");
}

}  // namespace rdw

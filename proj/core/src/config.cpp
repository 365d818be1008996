#include "rdw/config.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

#include <nlohmann/json.hpp>

#include "rdw/csv.hpp"
#include "rdw/errors.hpp"
#include "rdw/gaze_script.hpp"
#include "rdw/sequence.hpp"

namespace rdw {

using json = nlohmann::ordered_json;

std::vector<double> PlanConfig::resolved_gains() const {
    return gains.empty() ? default_gain_levels() : gains;
}

const PsyParams& GroupResponders::for_group(TrialGroup group) const {
    switch (group) {
        case TrialGroup::WithDistractor: return with_distractor;
        case TrialGroup::WithoutDistractor: return without_distractor;
        case TrialGroup::Switch: return switch_group;
    }
    throw std::invalid_argument("for_group: unknown group");
}

PsyParams& GroupResponders::for_group(TrialGroup group) {
    return const_cast<PsyParams&>(std::as_const(*this).for_group(group));
}

namespace {

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
    throw ConfigError("config field '" + path + "': " + why);
}

void expect_keys(const json& obj, const std::string& path,
                 std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed)
            if (key == a) {
                known = true;
                break;
            }
        if (!known) bad_field(path.empty() ? key : path + "." + key, "unknown field");
    }
}

double get_number(const json& obj, const std::string& path, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number()) bad_field(path + key, "expected a number");
    return v.get<double>();
}

long get_integer(const json& obj, const std::string& path, const char* key, long fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) bad_field(path + key, "expected an integer");
    return v.get<long>();
}

std::uint64_t get_seed(const json& obj, const std::string& path, const char* key,
                       std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) bad_field(path + key, "expected an integer seed");
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    const long long s = v.get<long long>();
    if (s < 0) bad_field(path + key, "seed must be non-negative");
    return static_cast<std::uint64_t>(s);
}

bool get_bool(const json& obj, const std::string& path, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) bad_field(path + key, "expected true/false");
    return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& path, const char* key,
                       const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_string()) bad_field(path + key, "expected a string");
    return v.get<std::string>();
}

Scenario parse_scenario(const json& obj, Scenario out) {
    const std::string path = "scenario.";
    expect_keys(obj, "scenario",
                {"bounds_width", "bounds_depth", "virtual_path_length", "trigger_lead",
                 "walk_speed", "distractor_side", "distractor_speed", "start_x", "start_z"});
    out.bounds_width = get_number(obj, path, "bounds_width", out.bounds_width);
    out.bounds_depth = get_number(obj, path, "bounds_depth", out.bounds_depth);
    out.virtual_path_length = get_number(obj, path, "virtual_path_length", out.virtual_path_length);
    out.trigger_lead = get_number(obj, path, "trigger_lead", out.trigger_lead);
    out.walk_speed = get_number(obj, path, "walk_speed", out.walk_speed);
    out.distractor_speed = get_number(obj, path, "distractor_speed", out.distractor_speed);
    out.start_position.x = get_number(obj, path, "start_x", out.start_position.x);
    out.start_position.z = get_number(obj, path, "start_z", out.start_position.z);
    const std::string side =
        get_string(obj, path, "distractor_side",
                   out.distractor_side == DistractorSide::Left    ? "left"
                   : out.distractor_side == DistractorSide::Right ? "right"
                                                                  : "none");
    if (side == "left")
        out.distractor_side = DistractorSide::Left;
    else if (side == "right")
        out.distractor_side = DistractorSide::Right;
    else if (side == "none")
        out.distractor_side = DistractorSide::None;
    else
        bad_field("scenario.distractor_side", "expected left/right/none, got '" + side + "'");
    return out;
}

AttentionParams parse_attention(const json& obj, AttentionParams out) {
    const std::string path = "attention.";
    expect_keys(obj, "attention",
                {"accumulation_rate", "decay_rate", "gaussian_width_deg", "focus_threshold_deg",
                 "max_attention", "onset_hold"});
    out.accumulation_rate = get_number(obj, path, "accumulation_rate", out.accumulation_rate);
    out.decay_rate = get_number(obj, path, "decay_rate", out.decay_rate);
    out.gaussian_width_deg = get_number(obj, path, "gaussian_width_deg", out.gaussian_width_deg);
    out.focus_threshold_deg = get_number(obj, path, "focus_threshold_deg", out.focus_threshold_deg);
    out.max_attention = get_number(obj, path, "max_attention", out.max_attention);
    out.onset_hold = get_number(obj, path, "onset_hold", out.onset_hold);
    return out;
}

PlanConfig parse_plan(const json& obj, PlanConfig out) {
    const std::string path = "plan.";
    expect_keys(obj, "plan", {"gains", "repetitions", "seed", "participants", "gaze_preset"});
    if (obj.contains("gains")) {
        const auto& g = obj.at("gains");
        if (!g.is_array() || g.empty()) bad_field("plan.gains", "expected a non-empty array");
        out.gains.clear();
        for (const auto& v : g) {
            if (!v.is_number()) bad_field("plan.gains", "expected numbers");
            out.gains.push_back(v.get<double>());
        }
    }
    out.repetitions = static_cast<int>(get_integer(obj, path, "repetitions", out.repetitions));
    out.seed = get_seed(obj, path, "seed", out.seed);
    out.participants = static_cast<int>(get_integer(obj, path, "participants", out.participants));
    out.gaze_preset = get_string(obj, path, "gaze_preset", out.gaze_preset);
    return out;
}

PsyParams parse_psy(const json& obj, const std::string& path, PsyParams out) {
    expect_keys(obj, path, {"alpha", "beta", "gamma", "lambda"});
    const std::string prefix = path + ".";
    out.alpha = get_number(obj, prefix, "alpha", out.alpha);
    out.beta = get_number(obj, prefix, "beta", out.beta);
    out.gamma = get_number(obj, prefix, "gamma", out.gamma);
    out.lambda = get_number(obj, prefix, "lambda", out.lambda);
    std::string why;
    if (!out.valid(&why)) bad_field(path, why);
    return out;
}

FitOptions parse_fit_options(const json& obj, FitOptions out) {
    const std::string path = "fit_options.";
    expect_keys(obj, "fit_options", {"fix_gamma", "fix_lambda", "n_boot", "ci_level"});
    out.fix_gamma = get_number(obj, path, "fix_gamma", out.fix_gamma);
    out.fix_lambda = get_number(obj, path, "fix_lambda", out.fix_lambda);
    out.n_boot = static_cast<int>(get_integer(obj, path, "n_boot", out.n_boot));
    out.ci_level = get_number(obj, path, "ci_level", out.ci_level);
    return out;
}

json psy_to_json(const PsyParams& p) {
    return json{{"alpha", p.alpha}, {"beta", p.beta}, {"gamma", p.gamma}, {"lambda", p.lambda}};
}

}  // namespace

void RunConfig::validate() const {
    std::string why;
    if (!scenario.valid(&why)) throw ConfigError("config field 'scenario': " + why);
    if (!attention.valid(&why)) throw ConfigError("config field 'attention': " + why);

    const auto gains = plan.resolved_gains();
    for (double g : gains)
        if (!(g > 0.0) || !std::isfinite(g))
            throw ConfigError("config field 'plan.gains': gains must be positive");
    if (plan.repetitions < 1)
        throw ConfigError("config field 'plan.repetitions': must be >= 1");
    if (plan.participants < 1)
        throw ConfigError("config field 'plan.participants': must be >= 1");
    try {
        gaze_script_preset(plan.gaze_preset);
    } catch (const ConfigError& e) {
        throw ConfigError(std::string("config field 'plan.gaze_preset': ") + e.what());
    }

    for (TrialGroup g :
         {TrialGroup::WithDistractor, TrialGroup::WithoutDistractor, TrialGroup::Switch})
        if (!responders.for_group(g).valid(&why))
            throw ConfigError("config field 'responders." + to_string(g) + "': " + why);

    if (fit_options.n_boot < 100)
        throw ConfigError("config field 'fit_options.n_boot': must be >= 100");
    if (!(fit_options.ci_level > 0.0 && fit_options.ci_level < 1.0))
        throw ConfigError("config field 'fit_options.ci_level': must be in (0, 1)");
    {
        PsyParams probe{0.0, 1.0, fit_options.fix_gamma, fit_options.fix_lambda};
        if (!probe.valid(&why)) throw ConfigError("config field 'fit_options': " + why);
    }

    if (!(dt > 0.0) || !std::isfinite(dt))
        throw ConfigError("config field 'dt': must be a positive duration");
}

RunConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

    expect_keys(doc, "", {"scenario", "attention", "plan", "responder", "responders",
                          "fit_options", "output_dir", "dt", "frame_logs"});

    RunConfig cfg;
    if (doc.contains("scenario")) {
        if (!doc.at("scenario").is_object()) bad_field("scenario", "expected an object");
        cfg.scenario = parse_scenario(doc.at("scenario"), cfg.scenario);
    }
    if (doc.contains("attention")) {
        if (!doc.at("attention").is_object()) bad_field("attention", "expected an object");
        cfg.attention = parse_attention(doc.at("attention"), cfg.attention);
    }
    if (doc.contains("plan")) {
        if (!doc.at("plan").is_object()) bad_field("plan", "expected an object");
        cfg.plan = parse_plan(doc.at("plan"), cfg.plan);
    }
    if (doc.contains("responder") && doc.contains("responders"))
        throw ConfigError("config: use either 'responder' or 'responders', not both");
    if (doc.contains("responder")) {
        if (!doc.at("responder").is_object()) bad_field("responder", "expected an object");
        const PsyParams shared = parse_psy(doc.at("responder"), "responder", PsyParams{});
        cfg.responders.with_distractor = shared;
        cfg.responders.without_distractor = shared;
        cfg.responders.switch_group = shared;
    }
    if (doc.contains("responders")) {
        const auto& r = doc.at("responders");
        if (!r.is_object()) bad_field("responders", "expected an object");
        expect_keys(r, "responders", {"w_dst", "wo_dst", "switch"});
        if (r.contains("w_dst"))
            cfg.responders.with_distractor =
                parse_psy(r.at("w_dst"), "responders.w_dst", cfg.responders.with_distractor);
        if (r.contains("wo_dst"))
            cfg.responders.without_distractor =
                parse_psy(r.at("wo_dst"), "responders.wo_dst", cfg.responders.without_distractor);
        if (r.contains("switch"))
            cfg.responders.switch_group =
                parse_psy(r.at("switch"), "responders.switch", cfg.responders.switch_group);
    }
    if (doc.contains("fit_options")) {
        if (!doc.at("fit_options").is_object()) bad_field("fit_options", "expected an object");
        cfg.fit_options = parse_fit_options(doc.at("fit_options"), cfg.fit_options);
    }
    cfg.output_dir = get_string(doc, "", "output_dir", cfg.output_dir);
    cfg.dt = get_number(doc, "", "dt", cfg.dt);
    cfg.frame_logs = get_bool(doc, "", "frame_logs", cfg.frame_logs);
    return cfg;
}

RunConfig load_config(const std::string& path) {
    RunConfig cfg = parse_config(csv::read_file(path));
    cfg.validate();
    return cfg;
}

std::string serialize_config(const RunConfig& config) {
    const char* side = config.scenario.distractor_side == DistractorSide::Left    ? "left"
                       : config.scenario.distractor_side == DistractorSide::Right ? "right"
                                                                                  : "none";
    json doc;
    doc["scenario"] = json{{"bounds_width", config.scenario.bounds_width},
                           {"bounds_depth", config.scenario.bounds_depth},
                           {"virtual_path_length", config.scenario.virtual_path_length},
                           {"trigger_lead", config.scenario.trigger_lead},
                           {"walk_speed", config.scenario.walk_speed},
                           {"distractor_side", side},
                           {"distractor_speed", config.scenario.distractor_speed},
                           {"start_x", config.scenario.start_position.x},
                           {"start_z", config.scenario.start_position.z}};
    doc["attention"] = json{{"accumulation_rate", config.attention.accumulation_rate},
                            {"decay_rate", config.attention.decay_rate},
                            {"gaussian_width_deg", config.attention.gaussian_width_deg},
                            {"focus_threshold_deg", config.attention.focus_threshold_deg},
                            {"max_attention", config.attention.max_attention},
                            {"onset_hold", config.attention.onset_hold}};
    doc["plan"] = json{{"gains", config.plan.resolved_gains()},
                       {"repetitions", config.plan.repetitions},
                       {"seed", config.plan.seed},
                       {"participants", config.plan.participants},
                       {"gaze_preset", config.plan.gaze_preset}};
    doc["responders"] = json{{"w_dst", psy_to_json(config.responders.with_distractor)},
                             {"wo_dst", psy_to_json(config.responders.without_distractor)},
                             {"switch", psy_to_json(config.responders.switch_group)}};
    doc["fit_options"] = json{{"fix_gamma", config.fit_options.fix_gamma},
                              {"fix_lambda", config.fit_options.fix_lambda},
                              {"n_boot", config.fit_options.n_boot},
                              {"ci_level", config.fit_options.ci_level}};
    doc["output_dir"] = config.output_dir;
    doc["dt"] = config.dt;
    doc["frame_logs"] = config.frame_logs;
    return doc.dump(2) + "\n";
}

std::string resolve_output_dir(const RunConfig& config, const std::string& cli_override) {
    if (!cli_override.empty()) return cli_override;
    if (!config.output_dir.empty()) return config.output_dir;
    if (const char* env = std::getenv(kOutputDirEnvVar); env && *env) return env;
    return kDefaultOutputDir;
}

}  // namespace rdw

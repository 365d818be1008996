#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdw/attention.hpp"
#include "rdw/fit.hpp"
#include "rdw/psychometric.hpp"
#include "rdw/scenario.hpp"
#include "rdw/trial.hpp"

namespace rdw {

// Experiment plan shared by all groups of a run: stimulus ladder, repetition
// count, master seed, participant count, and the gaze behavior used on
// attention-driven trials.
struct PlanConfig {
    std::vector<double> gains;  // empty in the struct means the default ladder
    int repetitions = 5;
    std::uint64_t seed = 42;
    int participants = 1;
    std::string gaze_preset = "instant_focus";

    std::vector<double> resolved_gains() const;
};

// Ground-truth responder per condition. Defaults put a notably shallower
// curve on the distractor condition, matching the qualitative group effect
// the simulation is meant to exhibit.
struct GroupResponders {
    PsyParams with_distractor{1.08, 2.8104, 0.0, 0.0};
    PsyParams without_distractor{1.03, 5.6207, 0.0, 0.0};
    PsyParams switch_group{1.02, 6.7449, 0.0, 0.0};

    const PsyParams& for_group(TrialGroup group) const;
    PsyParams& for_group(TrialGroup group);
};

struct RunConfig {
    Scenario scenario;
    AttentionParams attention;
    PlanConfig plan;
    GroupResponders responders;
    FitOptions fit_options;
    std::string output_dir;  // empty: resolve via environment / default
    double dt = 1.0 / 90.0;
    bool frame_logs = true;

    // Throws ConfigError naming the offending field.
    void validate() const;
};

// JSON config I/O. parse_config accepts a document with any subset of the
// fields (defaults fill the rest) and rejects unknown keys. serialize_config
// writes every field; parse(serialize(c)) == c field-by-field.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);  // read file, parse, validate
std::string serialize_config(const RunConfig& config);

// Output directory resolution: CLI flag > config field > RDWLAB_OUTPUT_DIR >
// ./rdwlab_out.
std::string resolve_output_dir(const RunConfig& config, const std::string& cli_override);

inline constexpr const char* kOutputDirEnvVar = "RDWLAB_OUTPUT_DIR";
inline constexpr const char* kDefaultOutputDir = "rdwlab_out";

}  // namespace rdw

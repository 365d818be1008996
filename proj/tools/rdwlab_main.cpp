#include <array>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdw/batch.hpp"
#include "rdw/chi_square.hpp"
#include "rdw/config.hpp"
#include "rdw/csv.hpp"
#include "rdw/errors.hpp"
#include "rdw/fit.hpp"
#include "rdw/pipeline.hpp"
#include "rdw/report.hpp"
#include "rdw/sequence.hpp"

namespace fs = std::filesystem;
using namespace rdw;

namespace {

void ensure_dir(const std::string& path) {
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec) throw IoError("cannot create directory '" + path + "': " + ec.message());
}

RunConfig load_or_default(const std::string& config_path) {
    if (config_path.empty()) {
        RunConfig cfg;
        cfg.validate();
        return cfg;
    }
    return load_config(config_path);
}

std::vector<TrialGroup> requested_groups(const std::string& group_flag) {
    if (group_flag.empty()) return all_groups();
    return {trial_group_from_string(group_flag)};
}

std::string trial_file_name(long trial_id) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "trial_%05ld.csv", trial_id);
    return buf;
}

long count_bounds_violations(const std::vector<TrialSummary>& rows) {
    long n = 0;
    for (const auto& r : rows)
        if (r.bounds_violation) ++n;
    return n;
}

void print_run_stats(const SimulationResult& sim) {
    for (const auto& g : sim.groups)
        std::cout << "group " << to_string(g.group) << ": "
                  << g.summaries.size() << " trials, " << g.excluded << " excluded\n";
    const auto rows = sim.all_summaries();
    bool any_t1 = false;
    for (const auto& r : rows)
        if (r.t1_duration) {
            any_t1 = true;
            break;
        }
    if (any_t1) {
        const T1Stats stats = t1_statistics(rows);
        std::cout << "t1 (s): count " << stats.count << ", min " << csv::num(stats.min)
                  << ", median " << csv::num(stats.median) << ", mean " << csv::num(stats.mean)
                  << ", max " << csv::num(stats.max) << ", sd " << csv::num(stats.sd) << "\n";
    } else {
        std::cout << "t1 (s): none recorded\n";
    }
}

// Writes summary, per-group datasets, optional frame logs, and t1 stats.
SimulationResult run_simulation(const RunConfig& cfg, const std::vector<TrialGroup>& groups,
                                const std::string& out) {
    ensure_dir(out);
    TraceSink sink;
    if (cfg.frame_logs) {
        const std::string trials_dir = out + "/trials";
        ensure_dir(trials_dir);
        sink = [trials_dir](const TrialSummary& summary, const TrialTrace& trace) {
            csv::write_file(trials_dir + "/" + trial_file_name(summary.trial_id),
                            frame_csv(trace));
        };
    }

    const SimulationResult sim = simulate_all(cfg, groups, sink);
    const auto rows = sim.all_summaries();
    csv::write_file(out + "/summary.csv", summary_csv(rows));
    for (const auto& g : sim.groups)
        csv::write_file(out + "/dataset_" + to_string(g.group) + ".csv", dataset_csv(g.dataset));

    long excluded = 0;
    for (const auto& g : sim.groups) excluded += g.excluded;
    T1Stats stats;  // zero count unless a dynamic trial saturated
    for (const auto& r : rows)
        if (r.t1_duration) {
            stats = t1_statistics(rows);
            break;
        }
    csv::write_file(out + "/t1_stats.json",
                    t1_stats_json(stats, excluded, count_bounds_violations(rows)));

    csv::write_file(out + "/config.json", serialize_config(cfg));
    print_run_stats(sim);
    return sim;
}

// Accepts either an aggregated gain,n,k file or a trial summary CSV (the
// latter is filtered to one group and aggregated, exclusions dropped).
ResponseDataset load_fit_input(const std::string& path, const std::string& group_flag) {
    const std::string content = csv::read_file(path);
    std::istringstream in(content);
    std::string header;
    if (!std::getline(in, header)) throw IoError(path + ": empty input");
    if (!header.empty() && header.back() == '\r') header.pop_back();

    if (header == "gain,n,k" || header.find("trial_id,") != 0)
        return ResponseDataset::from_csv(path);

    // Summary format.
    std::map<double, ResponseLevel> levels;
    std::optional<TrialGroup> want;
    if (!group_flag.empty()) want = trial_group_from_string(group_flag);
    std::string seen_group;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = csv::split(line);
        if (f.size() != 7)
            throw IoError(path + ":" + std::to_string(line_no) + ": expected 7 summary fields");
        const std::string& group = f[1];
        if (want) {
            if (group != to_string(*want)) continue;
        } else if (seen_group.empty()) {
            seen_group = group;
        } else if (group != seen_group) {
            throw ConfigError("summary file contains several groups; pick one with --group");
        }
        if (f[4] == "0") continue;  // gain never reached target: excluded
        const double gain = std::stod(f[2]);
        auto [it, ins] = levels.try_emplace(gain, ResponseLevel{gain, 0, 0});
        ++it->second.n;
        if (f[6] == "1") ++it->second.k;
    }
    ResponseDataset data;
    for (auto& [gain, lv] : levels) data.levels.push_back(lv);
    if (data.levels.empty())
        throw IoError(path + ": no usable trials" +
                      (want ? " for group " + to_string(*want) : std::string{}));
    data.normalize();
    return data;
}

struct Flags {
    std::string config_path;
    std::string out_override;
    std::string group;
    std::optional<std::uint64_t> seed;
};

RunConfig effective_config(const Flags& flags) {
    RunConfig cfg = load_or_default(flags.config_path);
    if (flags.seed) {
        cfg.plan.seed = *flags.seed;
        cfg.validate();
    }
    return cfg;
}

int cmd_simulate(const Flags& flags) {
    const RunConfig cfg = effective_config(flags);
    const std::string out = resolve_output_dir(cfg, flags.out_override);
    run_simulation(cfg, requested_groups(flags.group), out);
    std::cout << "wrote " << out << "/summary.csv\n";
    return 0;
}

int cmd_pipeline(const Flags& flags) {
    const RunConfig cfg = effective_config(flags);
    const std::string out = resolve_output_dir(cfg, flags.out_override);
    const SimulationResult sim = run_simulation(cfg, requested_groups(flags.group), out);
    const std::vector<GroupReport> reports = fit_groups(cfg, sim);

    for (std::size_t i = 0; i < reports.size(); ++i) {
        const std::string tag = to_string(reports[i].group);
        csv::write_file(out + "/fit_report_" + tag + ".json", fit_report_json(reports[i].fit));
        csv::write_file(out + "/plot_" + tag + ".csv", plot_csv(sim.groups[i].dataset, reports[i].fit));
        std::cout << "group " << tag << ": pse " << csv::num(reports[i].fit.pse) << ", ldt "
                  << csv::num(reports[i].fit.ldt) << ", udt " << csv::num(reports[i].fit.udt)
                  << "\n";
    }
    csv::write_file(out + "/table.csv", table_csv(reports));
    std::cout << "wrote " << out << "/table.csv\n";
    return 0;
}

int cmd_fit(const Flags& flags, const std::string& input, const FitOptions& flag_options,
            const std::vector<bool>& flag_set) {
    RunConfig cfg = load_or_default(flags.config_path);
    FitOptions options = cfg.fit_options;
    if (flag_set[0]) options.fix_gamma = flag_options.fix_gamma;
    if (flag_set[1]) options.fix_lambda = flag_options.fix_lambda;
    if (flag_set[2]) options.n_boot = flag_options.n_boot;
    if (flag_set[3]) options.ci_level = flag_options.ci_level;
    if (options.n_boot < 100) throw ConfigError("config field 'fit_options.n_boot': must be >= 100");
    if (!(options.ci_level > 0.0 && options.ci_level < 1.0))
        throw ConfigError("config field 'fit_options.ci_level': must be in (0, 1)");

    const std::uint64_t seed = flags.seed ? *flags.seed : cfg.plan.seed;
    const ResponseDataset data = load_fit_input(input, flags.group);
    const PsyFit fit = fit_with_ci(data, options, seed);

    const std::string out = resolve_output_dir(cfg, flags.out_override);
    ensure_dir(out);
    csv::write_file(out + "/fit_report.json", fit_report_json(fit));
    csv::write_file(out + "/plot.csv", plot_csv(data, fit));
    std::cout << "pse " << csv::num(fit.pse) << ", ldt " << csv::num(fit.ldt) << ", udt "
              << csv::num(fit.udt) << ", converged " << (fit.converged ? "yes" : "no") << "\n"
              << "wrote " << out << "/fit_report.json\n";
    return 0;
}

int cmd_sequence(const Flags& flags) {
    const RunConfig cfg = effective_config(flags);
    const std::string out = resolve_output_dir(cfg, flags.out_override);
    ensure_dir(out);
    const auto gains = cfg.plan.resolved_gains();
    std::vector<std::vector<double>> pool;
    for (int i = 0; i < kSequencePoolSize; ++i)
        pool.push_back(
            shuffle_gains(sequence_seed(cfg.plan.seed, i), gains, cfg.plan.repetitions));
    csv::write_file(out + "/sequences.csv", sequences_csv(pool));
    std::cout << "wrote " << out << "/sequences.csv (" << pool.size() << " sequences of "
              << pool.front().size() << ")\n";
    return 0;
}

int cmd_chisq(const Flags& flags, const std::vector<long>& cells) {
    const std::array<std::array<long, 2>, 2> table{{{cells[0], cells[1]}, {cells[2], cells[3]}}};
    const ChiSquareResult result = chi_square_2x2(table);

    RunConfig cfg = load_or_default(flags.config_path);
    const std::string out = resolve_output_dir(cfg, flags.out_override);
    ensure_dir(out);
    csv::write_file(out + "/chisq.json", chisq_json(table, result));
    std::cout << "chi2(" << result.df << ", N=" << result.total
              << ") = " << csv::num(result.statistic) << "\n"
              << "wrote " << out << "/chisq.json\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic redirected-walking lab: trial simulation and 2AFC analysis"};
    app.require_subcommand(1);

    Flags flags;
    auto add_common = [&](CLI::App* sub, bool with_group = true) {
        sub->add_option("--config", flags.config_path, "JSON run configuration");
        sub->add_option("--out", flags.out_override, "output directory (overrides config and env)");
        sub->add_option("--seed", flags.seed, "master seed override");
        if (with_group)
            sub->add_option("--group", flags.group, "restrict to one group: w_dst, wo_dst, switch");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "run trials, write summary and frame logs");
    add_common(simulate);

    CLI::App* fit = app.add_subcommand("fit", "fit the psychometric model to a dataset");
    add_common(fit);
    std::string fit_input;
    FitOptions fit_flag_options;
    fit->add_option("input", fit_input, "gain,n,k CSV or trial summary CSV")->required();
    auto* opt_gamma = fit->add_option("--fix-gamma", fit_flag_options.fix_gamma, "guess rate");
    auto* opt_lambda = fit->add_option("--fix-lambda", fit_flag_options.fix_lambda, "lapse rate");
    auto* opt_nboot = fit->add_option("--n-boot", fit_flag_options.n_boot, "bootstrap replicates");
    auto* opt_ci = fit->add_option("--ci-level", fit_flag_options.ci_level, "CI coverage level");

    CLI::App* pipeline = app.add_subcommand("pipeline", "simulate, fit every group, emit the table");
    add_common(pipeline);

    CLI::App* sequence = app.add_subcommand("sequence", "emit the stored gain sequences");
    add_common(sequence, false);

    CLI::App* chisq = app.add_subcommand("chisq", "2x2 chi-square test (row-major cell counts)");
    add_common(chisq, false);
    std::vector<long> cells;
    chisq->add_option("cells", cells, "a b c d")->expected(4)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);  // help/version exit 0, usage errors nonzero
    }

    try {
        if (app.got_subcommand(simulate)) return cmd_simulate(flags);
        if (app.got_subcommand(fit))
            return cmd_fit(flags, fit_input, fit_flag_options,
                           {opt_gamma->count() > 0, opt_lambda->count() > 0,
                            opt_nboot->count() > 0, opt_ci->count() > 0});
        if (app.got_subcommand(pipeline)) return cmd_pipeline(flags);
        if (app.got_subcommand(sequence)) return cmd_sequence(flags);
        if (app.got_subcommand(chisq)) return cmd_chisq(flags, cells);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const AnalysisError& e) {
        std::cerr << "analysis error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}

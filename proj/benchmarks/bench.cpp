#include <benchmark/benchmark.h>

#include "rdw/attention.hpp"
#include "rdw/batch.hpp"
#include "rdw/fit.hpp"
#include "rdw/psychometric.hpp"
#include "rdw/rng.hpp"
#include "rdw/sequence.hpp"
#include "rdw/trial.hpp"

namespace {

constexpr double kDt = 1.0 / 90.0;

void BM_AttentionStep(benchmark::State& state) {
    const rdw::AttentionParams params;
    rdw::AttentionState s;
    double deg = 0.0;
    for (auto _ : state) {
        s = rdw::attention_step(s, deg, kDt, params);
        deg = deg == 0.0 ? 40.0 : 0.0;  // alternate focus and look-away
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_AttentionStep);

void BM_RunTrial(benchmark::State& state) {
    const rdw::Scenario scenario;
    const rdw::AttentionParams params;
    const rdw::GazeScript gaze = rdw::instant_focus();
    for (auto _ : state) {
        auto trace = rdw::run_trial(scenario, rdw::TrialGroup::WithDistractor, 1.4, gaze,
                                    params, kDt, false);
        benchmark::DoNotOptimize(trace);
    }
}
BENCHMARK(BM_RunTrial);

rdw::ResponseDataset synthetic_dataset() {
    const rdw::PsyParams truth{1.0, 6.0, 0.0, 0.0};
    rdw::Rng rng(99);
    rdw::ResponseDataset data;
    for (double g : rdw::default_gain_levels())
        data.levels.push_back({g, 130, rdw::binomial(rng, 130, rdw::psychometric_value(g, truth))});
    return data;
}

void BM_FitPsychometric(benchmark::State& state) {
    const rdw::ResponseDataset data = synthetic_dataset();
    for (auto _ : state) {
        auto fit = rdw::fit_psychometric(data);
        benchmark::DoNotOptimize(fit);
    }
}
BENCHMARK(BM_FitPsychometric);

void BM_BootstrapCi100(benchmark::State& state) {
    const rdw::ResponseDataset data = synthetic_dataset();
    const rdw::PsyFit fit = rdw::fit_psychometric(data);
    for (auto _ : state) {
        auto ci = rdw::bootstrap_ci(data, fit, 100, 7);
        benchmark::DoNotOptimize(ci);
    }
}
BENCHMARK(BM_BootstrapCi100);

}  // namespace

BENCHMARK_MAIN();

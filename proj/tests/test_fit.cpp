#include <doctest.h>

#include <cmath>

#include "rdw/errors.hpp"
#include "rdw/fit.hpp"
#include "rdw/rng.hpp"
#include "rdw/sequence.hpp"

using namespace rdw;

namespace {
// Synthetic 2AFC data at the standard ladder from a known ground truth.
ResponseDataset make_synthetic(std::uint64_t seed, double alpha, double beta, long n_per_level) {
    const PsyParams truth{alpha, beta, 0.0, 0.0};
    ResponseDataset data;
    Rng rng(seed);
    for (double gain : default_gain_levels()) {
        const double p = psychometric_value(gain, truth);
        data.levels.push_back({gain, n_per_level, binomial(rng, n_per_level, p)});
    }
    return data;
}
}  // namespace

TEST_CASE("fit recovers the generating parameters at full-study counts") {
    for (std::uint64_t seed : {11u, 12u, 13u, 14u, 15u}) {
        const auto data = make_synthetic(seed, 1.0, 6.0, 130);
        const PsyFit fit = fit_psychometric(data);
        CHECK(fit.converged);
        CHECK(std::abs(fit.params.alpha - 1.0) <= 0.02);
        CHECK(std::abs(fit.params.beta - 6.0) / 6.0 <= 0.15);
        CHECK(fit.sse <= 0.05);
        CHECK(fit.ldt < fit.pse);
        CHECK(fit.pse < fit.udt);
        CHECK(fit.aic == doctest::Approx(2.0 * 2 + 2.0 * fit.nll));
    }
}

TEST_CASE("the fitted likelihood beats the ground truth's") {
    const auto data = make_synthetic(21, 1.0, 6.0, 130);
    const PsyFit fit = fit_psychometric(data);
    const double truth_nll = neg_log_likelihood(data.levels, PsyParams{1.0, 6.0, 0.0, 0.0});
    CHECK(fit.nll <= truth_nll + 1e-9);
}

TEST_CASE("fitting is deterministic") {
    const auto data = make_synthetic(33, 1.05, 4.0, 60);
    const PsyFit a = fit_psychometric(data);
    const PsyFit b = fit_psychometric(data);
    CHECK(a.params.alpha == b.params.alpha);
    CHECK(a.params.beta == b.params.beta);
    CHECK(a.nll == b.nll);
}

TEST_CASE("guess and lapse rates stay where they are pinned") {
    const auto data = make_synthetic(44, 1.0, 6.0, 130);
    const PsyFit fit = fit_psychometric(data, 0.05, 0.02);
    CHECK(fit.params.gamma == 0.05);
    CHECK(fit.params.lambda == 0.02);
    CHECK(fit.converged);
    CHECK_THROWS_AS(fit_psychometric(data, 0.7, 0.5), std::invalid_argument);
}

TEST_CASE("non-identifiable datasets are refused") {
    ResponseDataset step;  // perfect separation
    step.levels = {{0.5, 5, 0}, {0.9, 5, 0}, {1.1, 5, 5}, {1.5, 5, 5}};
    CHECK_THROWS_AS(fit_psychometric(step), AnalysisError);

    ResponseDataset one_interior;
    one_interior.levels = {{0.5, 5, 0}, {1.0, 5, 2}, {1.5, 5, 5}};
    CHECK_THROWS_AS(fit_psychometric(one_interior), AnalysisError);

    ResponseDataset empty;
    CHECK_THROWS_AS(fit_psychometric(empty), AnalysisError);
}

TEST_CASE("bootstrap interval brackets the estimate and replays exactly") {
    const auto data = make_synthetic(55, 1.0, 6.0, 130);
    const PsyFit fit = fit_psychometric(data);

    const auto ci = bootstrap_ci(data, fit, 200, 77);
    CHECK(ci[0] < fit.pse);
    CHECK(ci[1] > fit.pse);
    CHECK(ci[1] - ci[0] < 0.2);  // 130 trials/level pin the PSE tightly

    CHECK(bootstrap_ci(data, fit, 200, 77) == ci);
    CHECK(bootstrap_ci(data, fit, 200, 78) != ci);

    // wider coverage, wider interval (same seed, so deterministic)
    const auto narrow = bootstrap_ci(data, fit, 200, 77, 0.5);
    CHECK(narrow[1] - narrow[0] < ci[1] - ci[0]);

    CHECK_THROWS_AS(bootstrap_ci(data, fit, 50, 77), std::invalid_argument);
    CHECK_THROWS_AS(bootstrap_ci(data, fit, 200, 77, 1.5), std::invalid_argument);
}

TEST_CASE("bootstrap refuses unreliable resamples") {
    // Two single-trial levels cannot produce interior resamples, so every
    // replicate fails and the interval must be refused rather than faked.
    ResponseDataset tiny;
    tiny.levels = {{0.9, 1, 0}, {1.1, 1, 1}};
    PsyFit fake;
    fake.params = PsyParams{1.0, 1000.0, 0.0, 0.0};
    fake.pse = 1.0;
    CHECK_THROWS_AS(bootstrap_ci(tiny, fake, 100, 5), AnalysisError);
}

TEST_CASE("fit_with_ci attaches the interval") {
    const auto data = make_synthetic(66, 1.0, 6.0, 130);
    FitOptions opts;
    opts.n_boot = 150;
    const PsyFit fit = fit_with_ci(data, opts, 99);
    CHECK(std::isfinite(fit.pse_ci[0]));
    CHECK(std::isfinite(fit.pse_ci[1]));
    CHECK(fit.pse_ci == bootstrap_ci(data, fit_psychometric(data), 150, 99, opts.ci_level));
}

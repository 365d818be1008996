#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "rdw/dataset.hpp"
#include "rdw/psychometric.hpp"

namespace rdw {

struct PsyFit {
    PsyParams params;
    double nll = 0.0;
    double aic = 0.0;
    double sse = 0.0;
    double ldt = 0.0;
    double pse = 0.0;
    double udt = 0.0;
    std::array<double, 2> pse_ci{std::numeric_limits<double>::quiet_NaN(),
                                 std::numeric_limits<double>::quiet_NaN()};
    bool converged = false;
};

struct FitOptions {
    double fix_gamma = 0.0;
    double fix_lambda = 0.0;
    int n_boot = 500;
    double ci_level = 0.95;
};

// Maximum-likelihood fit of location and slope with guess/lapse rates held
// fixed.  Uses Nelder-Mead over (scaled location, log slope) from a
// deterministic multi-start schedule.  Throws AnalysisError when the dataset
// has fewer than two partially-correct levels (not identifiable).
PsyFit fit_psychometric(const ResponseDataset& data, double fix_gamma = 0.0,
                        double fix_lambda = 0.0);

// Parametric bootstrap percentile interval for the PSE.  Each replicate
// resamples k ~ Binomial(n, psi_fit) per level and refits from a warm start.
// Throws AnalysisError when more than 20% of replicates fail to produce a
// usable refit.  n_boot must be >= 100.
std::array<double, 2> bootstrap_ci(const ResponseDataset& data, const PsyFit& fit, int n_boot,
                                   std::uint64_t seed, double level = 0.95);

// Convenience: fit, then attach the bootstrap interval.
PsyFit fit_with_ci(const ResponseDataset& data, const FitOptions& options, std::uint64_t seed);

}  // namespace rdw

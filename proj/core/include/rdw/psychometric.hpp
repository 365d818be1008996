#pragma once

#include <vector>

#include "rdw/dataset.hpp"

namespace rdw {

// Four-parameter 2AFC psychometric model:
//   psi(x) = gamma + (1 - gamma - lambda) * Phi(beta * (x - alpha))
// alpha: location (point of subjective equality when gamma == lambda),
// beta: slope, gamma: guess rate, lambda: lapse rate.
struct PsyParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 0.0;
    double lambda = 0.0;

    bool valid(std::string* why = nullptr) const;
};

// Standard normal CDF evaluated at beta * (x - alpha).  beta must be > 0.
double cumulative_normal(double x, double alpha, double beta);

// Standard normal quantile function (inverse CDF) for p in (0, 1).
double normal_quantile(double p);

// Full model evaluation psi(x).
double psychometric_value(double x, const PsyParams& params);

// Bernoulli negative log-likelihood of the dataset under the model.
// Model probabilities are clamped to [1e-12, 1 - 1e-12].
double neg_log_likelihood(const std::vector<ResponseLevel>& levels, const PsyParams& params);

// Sum over levels of (k/n - psi(gain))^2.
double sum_squared_error(const std::vector<ResponseLevel>& levels, const PsyParams& params);

// Akaike information criterion for a fit with k free parameters.
double aic_value(double nll, int n_free_params);

struct Thresholds {
    double ldt;  // x where psi = 0.25
    double pse;  // x where psi = 0.50
    double udt;  // x where psi = 0.75
};

// Invert the model at 0.25 / 0.50 / 0.75.  Throws AnalysisError when a target
// proportion is not strictly inside the (gamma, 1 - lambda) response range.
Thresholds thresholds(const PsyParams& params);

}  // namespace rdw

#include "rdw/psychometric.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rdw/errors.hpp"

namespace rdw {

namespace {
constexpr double kProbClamp = 1e-12;

double clamp_prob(double p) {
    if (p < kProbClamp) return kProbClamp;
    if (p > 1.0 - kProbClamp) return 1.0 - kProbClamp;
    return p;
}
}  // namespace

bool PsyParams::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!(std::isfinite(alpha))) return fail("alpha must be finite");
    if (!(beta > 0.0) || !std::isfinite(beta)) return fail("beta must be positive and finite");
    if (!(gamma >= 0.0 && gamma < 1.0)) return fail("gamma must be in [0, 1)");
    if (!(lambda >= 0.0 && lambda < 1.0)) return fail("lambda must be in [0, 1)");
    if (!(gamma + lambda < 1.0)) return fail("gamma + lambda must be < 1");
    return true;
}

double cumulative_normal(double x, double alpha, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("cumulative_normal: beta must be > 0");
    const double z = beta * (x - alpha);
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

// Acklam's rational approximation with one Halley refinement step; accurate to
// full double precision over (0, 1).
double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("normal_quantile: p must be in (0, 1)");

    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // One Halley step against the exact CDF.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

double psychometric_value(double x, const PsyParams& params) {
    std::string why;
    if (!params.valid(&why)) throw std::invalid_argument("psychometric_value: " + why);
    return params.gamma +
           (1.0 - params.gamma - params.lambda) * cumulative_normal(x, params.alpha, params.beta);
}

double neg_log_likelihood(const std::vector<ResponseLevel>& levels, const PsyParams& params) {
    std::string why;
    if (!params.valid(&why)) throw std::invalid_argument("neg_log_likelihood: " + why);
    double nll = 0.0;
    for (const auto& lv : levels) {
        const double psi = clamp_prob(psychometric_value(lv.gain, params));
        nll -= static_cast<double>(lv.k) * std::log(psi) +
               static_cast<double>(lv.n - lv.k) * std::log(1.0 - psi);
    }
    return nll;
}

double sum_squared_error(const std::vector<ResponseLevel>& levels, const PsyParams& params) {
    double sse = 0.0;
    for (const auto& lv : levels) {
        const double diff =
            static_cast<double>(lv.k) / static_cast<double>(lv.n) - psychometric_value(lv.gain, params);
        sse += diff * diff;
    }
    return sse;
}

double aic_value(double nll, int n_free_params) {
    if (n_free_params < 0) throw std::invalid_argument("aic_value: negative parameter count");
    return 2.0 * n_free_params + 2.0 * nll;
}

Thresholds thresholds(const PsyParams& params) {
    std::string why;
    if (!params.valid(&why)) throw std::invalid_argument("thresholds: " + why);
    const double span = 1.0 - params.gamma - params.lambda;
    auto invert = [&](double p) {
        const double q = (p - params.gamma) / span;
        if (!(q > 0.0 && q < 1.0))
            throw AnalysisError("threshold proportion " + std::to_string(p) +
                                " outside attainable response range");
        return params.alpha + normal_quantile(q) / params.beta;
    };
    return Thresholds{invert(0.25), invert(0.50), invert(0.75)};
}

}  // namespace rdw

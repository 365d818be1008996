#include "rdw/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdw/errors.hpp"
#include "rdw/rng.hpp"

namespace rdw {

namespace {

constexpr double kHuge = 1e300;
constexpr double kSimplexTol = 1e-7;
constexpr int kMaxIterations = 600;
constexpr double kLocationJitter = 0.15;
constexpr double kLogSlopeJitter = 0.7;
constexpr std::uint64_t kRestartSeed = 0x1f2e3d4c5b6a7988ull;

using Point = std::array<double, 2>;

struct Objective {
    const std::vector<ResponseLevel>& levels;
    double x_scale;
    double gamma;
    double lambda;

    PsyParams to_params(const Point& p) const {
        return PsyParams{p[0] * x_scale, std::exp(p[1]), gamma, lambda};
    }

    double operator()(const Point& p) const {
        const PsyParams prm = to_params(p);
        if (!prm.valid()) return kHuge;
        const double nll = neg_log_likelihood(levels, prm);
        return std::isfinite(nll) ? nll : kHuge;
    }
};

struct NmResult {
    Point x{};
    double f = kHuge;
    bool converged = false;
};

double distance(const Point& a, const Point& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
}

// Standard Nelder-Mead in two dimensions (reflection 1, expansion 2,
// contraction 0.5, shrink 0.5), stopping when the simplex diameter falls
// below tol in the scaled coordinates.
NmResult nelder_mead(const Objective& obj, const Point& start, const Point& step) {
    std::array<Point, 3> xs{start,
                            Point{start[0] + step[0], start[1]},
                            Point{start[0], start[1] + step[1]}};
    std::array<double, 3> fs{obj(xs[0]), obj(xs[1]), obj(xs[2])};

    auto order = [&]() {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2 - i; ++j)
                if (fs[j + 1] < fs[j]) {
                    std::swap(fs[j], fs[j + 1]);
                    std::swap(xs[j], xs[j + 1]);
                }
    };

    NmResult result;
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        order();
        const double diameter = std::max({distance(xs[0], xs[1]), distance(xs[0], xs[2]),
                                          distance(xs[1], xs[2])});
        if (diameter < kSimplexTol) {
            result.converged = true;
            break;
        }

        const Point centroid{0.5 * (xs[0][0] + xs[1][0]), 0.5 * (xs[0][1] + xs[1][1])};
        auto along = [&](double t) {
            return Point{centroid[0] + t * (centroid[0] - xs[2][0]),
                         centroid[1] + t * (centroid[1] - xs[2][1])};
        };

        const Point xr = along(1.0);
        const double fr = obj(xr);
        if (fr < fs[0]) {
            const Point xe = along(2.0);
            const double fe = obj(xe);
            if (fe < fr) {
                xs[2] = xe;
                fs[2] = fe;
            } else {
                xs[2] = xr;
                fs[2] = fr;
            }
        } else if (fr < fs[1]) {
            xs[2] = xr;
            fs[2] = fr;
        } else if (fr < fs[2]) {
            const Point xc = along(0.5);  // outside contraction
            const double fc = obj(xc);
            if (fc <= fr) {
                xs[2] = xc;
                fs[2] = fc;
            } else {
                for (int i = 1; i < 3; ++i) {  // shrink toward best
                    xs[i] = Point{xs[0][0] + 0.5 * (xs[i][0] - xs[0][0]),
                                  xs[0][1] + 0.5 * (xs[i][1] - xs[0][1])};
                    fs[i] = obj(xs[i]);
                }
            }
        } else {
            const Point xc = along(-0.5);  // inside contraction
            const double fc = obj(xc);
            if (fc < fs[2]) {
                xs[2] = xc;
                fs[2] = fc;
            } else {
                for (int i = 1; i < 3; ++i) {
                    xs[i] = Point{xs[0][0] + 0.5 * (xs[i][0] - xs[0][0]),
                                  xs[0][1] + 0.5 * (xs[i][1] - xs[0][1])};
                    fs[i] = obj(xs[i]);
                }
            }
        }
    }
    order();
    result.x = xs[0];
    result.f = fs[0];
    return result;
}

NmResult best_of_starts(const Objective& obj, const std::vector<Point>& starts) {
    NmResult best;
    const Point step{0.05, 0.5};
    for (const auto& s : starts) {
        NmResult r = nelder_mead(obj, s, step);
        if (r.f < best.f || (r.f == best.f && r.converged && !best.converged)) best = r;
    }
    return best;
}

double x_range_of(const std::vector<ResponseLevel>& levels) {
    return levels.back().gain - levels.front().gain;
}

// Starting location: linear interpolation of the observed proportions across
// the mid-response target; falls back to the midpoint of the tested range.
double initial_location(const std::vector<ResponseLevel>& levels, double gamma, double lambda) {
    const double target = gamma + 0.5 * (1.0 - gamma - lambda);
    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        const double p0 = static_cast<double>(levels[i].k) / static_cast<double>(levels[i].n);
        const double p1 =
            static_cast<double>(levels[i + 1].k) / static_cast<double>(levels[i + 1].n);
        if ((p0 - target) * (p1 - target) <= 0.0 && p0 != p1) {
            const double t = (target - p0) / (p1 - p0);
            return levels[i].gain + t * (levels[i + 1].gain - levels[i].gain);
        }
    }
    return 0.5 * (levels.front().gain + levels.back().gain);
}

double jitter(Rng& rng, double half_width) {
    return (2.0 * uniform01(rng) - 1.0) * half_width;
}

double percentile_type7(const std::vector<double>& sorted, double q) {
    const double h = static_cast<double>(sorted.size() - 1) * q;
    const std::size_t i = static_cast<std::size_t>(h);
    if (i + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(i);
    return sorted[i] + frac * (sorted[i + 1] - sorted[i]);
}

}  // namespace

PsyFit fit_psychometric(const ResponseDataset& data, double fix_gamma, double fix_lambda) {
    ResponseDataset sorted = data;
    sorted.normalize();
    {
        PsyParams probe{0.0, 1.0, fix_gamma, fix_lambda};
        std::string why;
        if (!probe.valid(&why)) throw std::invalid_argument("fit_psychometric: " + why);
    }
    if (sorted.interior_levels() < 2)
        throw AnalysisError(
            "dataset not identifiable: need at least two levels with partially-correct "
            "responses (0 < k < n)");

    const auto& levels = sorted.levels;
    const double x_scale = x_range_of(levels);
    const Objective obj{levels, x_scale, fix_gamma, fix_lambda};

    const double alpha0 = initial_location(levels, fix_gamma, fix_lambda);
    const double beta0 = 2.0 / x_scale;
    const Point base{alpha0 / x_scale, std::log(beta0)};

    std::vector<Point> starts{base};
    Rng rng(kRestartSeed);
    for (int i = 0; i < 5; ++i)
        starts.push_back(Point{base[0] + jitter(rng, kLocationJitter),
                               base[1] + jitter(rng, kLogSlopeJitter)});

    const NmResult best = best_of_starts(obj, starts);
    if (best.f >= kHuge) throw AnalysisError("psychometric fit failed: no finite likelihood");

    PsyFit fit;
    fit.params = obj.to_params(best.x);
    fit.nll = best.f;
    fit.aic = aic_value(best.f, 2);
    fit.sse = sum_squared_error(levels, fit.params);
    const Thresholds th = thresholds(fit.params);
    fit.ldt = th.ldt;
    fit.pse = th.pse;
    fit.udt = th.udt;
    fit.converged = best.converged;
    return fit;
}

std::array<double, 2> bootstrap_ci(const ResponseDataset& data, const PsyFit& fit, int n_boot,
                                   std::uint64_t seed, double level) {
    if (n_boot < 100) throw std::invalid_argument("bootstrap_ci: n_boot must be >= 100");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("bootstrap_ci: level must be in (0, 1)");

    ResponseDataset sorted = data;
    sorted.normalize();
    const auto& levels = sorted.levels;
    if (levels.size() < 2) throw AnalysisError("bootstrap_ci: need at least two levels");

    const double x_scale = x_range_of(levels);
    const Objective obj{levels, x_scale, fit.params.gamma, fit.params.lambda};
    const Point warm{fit.params.alpha / x_scale, std::log(fit.params.beta)};

    std::vector<double> psi(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i)
        psi[i] = psychometric_value(levels[i].gain, fit.params);

    std::vector<double> pses;
    pses.reserve(static_cast<std::size_t>(n_boot));
    int failures = 0;

    ResponseDataset replicate = sorted;
    for (int r = 0; r < n_boot; ++r) {
        Rng rng(substream_seed(seed, static_cast<std::uint64_t>(r)));
        for (std::size_t i = 0; i < levels.size(); ++i)
            replicate.levels[i].k = binomial(rng, levels[i].n, psi[i]);

        if (replicate.interior_levels() < 2) {
            ++failures;
            continue;
        }

        const Objective rep_obj{replicate.levels, x_scale, fit.params.gamma, fit.params.lambda};
        std::vector<Point> starts{warm};
        for (int j = 0; j < 2; ++j)
            starts.push_back(Point{warm[0] + jitter(rng, kLocationJitter),
                                   warm[1] + jitter(rng, kLogSlopeJitter)});
        const NmResult refit = best_of_starts(rep_obj, starts);
        if (!refit.converged || refit.f >= kHuge) {
            ++failures;
            continue;
        }
        try {
            pses.push_back(thresholds(rep_obj.to_params(refit.x)).pse);
        } catch (const AnalysisError&) {
            ++failures;
        }
    }

    if (failures * 5 > n_boot)
        throw AnalysisError("bootstrap interval unreliable: " + std::to_string(failures) + " of " +
                            std::to_string(n_boot) + " replicates failed to refit");

    std::sort(pses.begin(), pses.end());
    const double tail = 0.5 * (1.0 - level);
    return {percentile_type7(pses, tail), percentile_type7(pses, 1.0 - tail)};
}

PsyFit fit_with_ci(const ResponseDataset& data, const FitOptions& options, std::uint64_t seed) {
    PsyFit fit = fit_psychometric(data, options.fix_gamma, options.fix_lambda);
    fit.pse_ci = bootstrap_ci(data, fit, options.n_boot, seed, options.ci_level);
    return fit;
}

}  // namespace rdw

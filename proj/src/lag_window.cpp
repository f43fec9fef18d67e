#include "kzp/lag_window.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kzp/chisq.hpp"
#include "kzp/quadrature.hpp"

namespace kzp {

namespace {

constexpr double kLogFloor = 1e-300;

}  // namespace

double StaticWindowSpec::df_constant() const {
    switch (kind) {
        case WindowKind::rectangular: return 1.0;
        case WindowKind::tukey_hamming: return 2.5;
        case WindowKind::tukey_hanning: return 2.67;
        case WindowKind::bartlett: return 3.0;
        case WindowKind::parzen: return 3.7;
    }
    throw std::invalid_argument("unknown window kind");
}

double StaticWindowSpec::bandwidth_constant() const {
    // Matches the df constant for every supported kind.
    return df_constant();
}

double lag_weight(WindowKind kind, double x) {
    const double ax = std::fabs(x);
    if (ax > 1.0) throw std::invalid_argument("lag_weight: |x| must not exceed 1");
    switch (kind) {
        case WindowKind::rectangular: return 1.0;
        case WindowKind::bartlett: return 1.0 - ax;
        case WindowKind::tukey_hanning: return 0.5 * (1.0 + std::cos(std::numbers::pi * x));
        case WindowKind::tukey_hamming: return 0.54 + 0.46 * std::cos(std::numbers::pi * x);
        case WindowKind::parzen:
            if (ax <= 0.5) return 1.0 - 6.0 * ax * ax + 6.0 * ax * ax * ax;
            return 2.0 * (1.0 - ax) * (1.0 - ax) * (1.0 - ax);
    }
    throw std::invalid_argument("unknown window kind");
}

double equivalent_df(WindowKind kind, int n, int truncation) {
    if (truncation < 1) throw std::invalid_argument("equivalent_df: truncation point must be >= 1");
    if (truncation >= n) throw std::invalid_argument("equivalent_df: truncation point must be < n");
    return StaticWindowSpec{kind, truncation}.df_constant() * static_cast<double>(n) / truncation;
}

double equivalent_df_numeric(WindowKind kind, int n, int truncation) {
    if (truncation < 1) throw std::invalid_argument("equivalent_df: truncation point must be >= 1");
    if (truncation >= n) throw std::invalid_argument("equivalent_df: truncation point must be < n");
    const auto squared = [kind](double x) {
        const double w = lag_weight(kind, x);
        return w * w;
    };
    // Split at the |x| kink and the Parzen breakpoints.
    double integral = 0.0;
    const double knots[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    for (int piece = 0; piece < 4; ++piece) {
        integral += integrate(squared, knots[piece], knots[piece + 1], 1e-10);
    }
    return 2.0 * static_cast<double>(n) / (truncation * integral);
}

RadianFrequency bandwidth(WindowKind kind, int truncation) {
    if (truncation < 1) throw std::invalid_argument("bandwidth: truncation point must be >= 1");
    return RadianFrequency{StaticWindowSpec{kind, truncation}.bandwidth_constant() *
                           std::numbers::pi / truncation};
}

double window_peak_gain(WindowKind kind, int truncation) {
    if (truncation < 1) throw std::invalid_argument("peak gain: truncation point must be >= 1");
    double gain = 1.0;  // W(0)
    for (int h = 1; h <= truncation; ++h) {
        gain += 2.0 * lag_weight(kind, static_cast<double>(h) / truncation);
    }
    return gain;
}

SmoothedPeriodogram static_smoothed_log_periodogram(const TimeSeries& y,
                                                    const StaticWindowSpec& spec,
                                                    const FrequencyGrid& grid, double alpha) {
    validate_grid(grid);
    const int n = static_cast<int>(y.values.size());
    if (spec.truncation < 1 || spec.truncation >= n) {
        throw std::invalid_argument("static smoothing: truncation point must satisfy 1 <= M < n");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("static smoothing: alpha must lie in (0, 1)");
    }
    const int truncation = spec.truncation;

    double mean = 0.0;
    for (const double v : y.values) mean += v;
    mean /= n;

    // Biased sample autocovariances, divisor n.
    std::vector<double> acov(static_cast<std::size_t>(truncation) + 1, 0.0);
    for (int h = 0; h <= truncation; ++h) {
        double s = 0.0;
        for (int t = 0; t + h < n; ++t) {
            s += (y.values[static_cast<std::size_t>(t)] - mean) *
                 (y.values[static_cast<std::size_t>(t + h)] - mean);
        }
        acov[static_cast<std::size_t>(h)] = s / n;
    }

    std::vector<double> weight(static_cast<std::size_t>(truncation) + 1);
    for (int h = 0; h <= truncation; ++h) {
        weight[static_cast<std::size_t>(h)] = lag_weight(spec.kind, static_cast<double>(h) / truncation);
    }

    const double nu = equivalent_df(spec.kind, n, truncation);
    const Interval offsets = ci_bounds(0.0, ConfidenceSpec{alpha, nu});
    const int reported_len = static_cast<int>(std::ceil(nu / 2.0));

    SmoothedPeriodogram sp;
    sp.grid = grid;
    sp.log_scale = true;
    sp.alpha = alpha;
    sp.method = SmoothMethod{SmoothFamily::static_window, spec.kind, truncation};
    const std::size_t grid_len = grid.size();
    sp.ordinates.resize(grid_len);
    sp.half_widths.assign(grid_len, reported_len);
    sp.realized_lengths.assign(grid_len, reported_len);
    sp.ci_lower.resize(grid_len);
    sp.ci_upper.resize(grid_len);
    sp.floored.assign(grid_len, 0);

    for (std::size_t i = 0; i < grid_len; ++i) {
        const double f = grid.frequencies[i];
        double est = acov[0];
        for (int h = 1; h <= truncation; ++h) {
            est += 2.0 * weight[static_cast<std::size_t>(h)] * acov[static_cast<std::size_t>(h)] *
                   std::cos(2.0 * std::numbers::pi * f * h);
        }
        if (est < kLogFloor) {
            est = kLogFloor;
            sp.floored[i] = 1;
        }
        const double logest = std::log(est);
        sp.ordinates[i] = logest;
        sp.ci_lower[i] = logest + offsets.lower;
        sp.ci_upper[i] = logest + offsets.upper;
    }
    validate_smoothed(sp);
    return sp;
}

}  // namespace kzp

#include "kzp/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kzp/kzft.hpp"
#include "kzp/lag_window.hpp"

namespace kzp {

double estimate_amplitude(double raw_scale_ordinate) {
    if (!(raw_scale_ordinate >= 0.0)) {
        throw std::invalid_argument("estimate_amplitude: ordinate must be nonnegative");
    }
    return 2.0 * std::sqrt(raw_scale_ordinate);
}

namespace {

// Maps log-ordinate bounds to the amplitude scale through the monotone
// transform used by the matching point estimate.
Interval amplitude_interval(const Interval& log_ci, double gain) {
    return Interval{2.0 * std::sqrt(std::exp(log_ci.lower) / gain),
                    2.0 * std::sqrt(std::exp(log_ci.upper) / gain)};
}

}  // namespace

ProtocolReport run_two_step(const TimeSeries& y, const AdaptiveSpec& adaptive, KzParams kz,
                            WindowKind preferred_kind, double alpha, int top) {
    if (!adaptive.log_scale) {
        throw std::invalid_argument("run_two_step requires log-scale dynamic smoothing");
    }
    ProtocolReport report;
    const int n = static_cast<int>(y.values.size());

    // Step 1: dynamic smoothing to detect, identify and separate frequencies.
    const RawPeriodogram raw = raw_periodogram(y, kz.window_width, kz.iterations);
    const SmoothedPeriodogram dynamic = smooth_with_cis(raw, adaptive);
    const std::vector<PeakSummary> peaks = summary_top(dynamic, 17, top);
    for (const auto& p : peaks) {
        report.detected.push_back(DetectedPeak{p.frequency, p.value, Interval{p.ci_lower, p.ci_upper}});
    }

    std::vector<double> freqs;
    freqs.reserve(peaks.size());
    for (const auto& p : peaks) freqs.push_back(p.frequency);
    std::sort(freqs.begin(), freqs.end());
    double min_gap = std::numbers::pi;
    for (std::size_t i = 1; i < freqs.size(); ++i) {
        min_gap = std::min(min_gap, 2.0 * std::numbers::pi * (freqs[i] - freqs[i - 1]));
    }
    report.min_gap_rad = min_gap;

    for (const WindowKind kind : kAllWindowKinds) {
        report.bounds.push_back(truncation_bounds(kind, n, min_gap));
    }
    report.chosen_kind = preferred_kind;

    report.fallback_used = !resolvable_by_static(n, 0.0, min_gap);
    if (report.fallback_used) {
        // Static smoothing cannot separate the closest pair; report strengths
        // straight from the dynamic pass.
        for (const auto& p : report.detected) {
            report.strengths.push_back(StrengthEstimate{p.frequency,
                                                        estimate_amplitude(std::exp(p.ordinate)),
                                                        p.ci, amplitude_interval(p.ci, 1.0)});
        }
        return report;
    }

    // Step 2: static pass at the median feasible truncation point.
    const BoundsReport chosen_bounds = truncation_bounds(preferred_kind, n, min_gap);
    const int chosen_m = std::clamp(chosen_bounds.m_median, 1, n - 1);
    report.chosen_m = chosen_m;
    const StaticWindowSpec window{preferred_kind, chosen_m};
    const SmoothedPeriodogram fixed =
        static_smoothed_log_periodogram(y, window, raw.grid, alpha);
    const double gain = window_peak_gain(preferred_kind, chosen_m);

    for (const auto& p : report.detected) {
        const std::size_t idx =
            static_cast<std::size_t>(std::llround(p.frequency / raw.grid.spacing));
        const Interval log_ci{fixed.ci_lower[idx], fixed.ci_upper[idx]};
        const double amplitude = 2.0 * std::sqrt(std::exp(fixed.ordinates[idx]) / gain);
        report.strengths.push_back(
            StrengthEstimate{p.frequency, amplitude, log_ci, amplitude_interval(log_ci, gain)});
    }
    return report;
}

}  // namespace kzp

#pragma once

#include <vector>

#include "kzp/adaptive.hpp"
#include "kzp/bounds.hpp"
#include "kzp/chisq.hpp"
#include "kzp/core.hpp"

namespace kzp {

struct KzParams {
    int window_width;  // m
    int iterations;    // k
};

struct DetectedPeak {
    double frequency;  // cycles per sample
    double ordinate;   // dynamic smoothed value (log scale by default)
    Interval ci;       // dynamic confidence bounds for the ordinate
};

struct StrengthEstimate {
    double frequency;
    double amplitude;
    Interval log_ci;        // confidence bounds for the log ordinate
    Interval amplitude_ci;  // the same bounds mapped to the amplitude scale
};

// Output of the two-step analysis: dynamic detection results, the resolution
// check, the per-kind truncation ranges, and the strength estimates from the
// static pass (or from the dynamic pass when the peaks are too close for
// static smoothing to resolve, in which case fallback_used is set).
struct ProtocolReport {
    std::vector<DetectedPeak> detected;
    double min_gap_rad = 0.0;  // pi when fewer than two peaks
    std::vector<BoundsReport> bounds;
    WindowKind chosen_kind = WindowKind::bartlett;
    int chosen_m = 0;  // 0 when fallback_used
    std::vector<StrengthEstimate> strengths;
    bool fallback_used = false;
};

// Amplitude of the sinusoid matching a raw-scale KZ periodogram ordinate:
// 2 * sqrt(ordinate). The KZ normalization maps a noiseless grid-frequency
// sinusoid of amplitude a to an ordinate of a^2/4, so no further calibration
// factor is needed.
double estimate_amplitude(double raw_scale_ordinate);

// Two-step analysis: dynamic smoothing to detect and separate frequencies,
// then (when the smallest detected gap is resolvable) a static pass at the
// median feasible truncation point of the preferred window kind to estimate
// signal strength with narrower, constant-width intervals.
ProtocolReport run_two_step(const TimeSeries& y, const AdaptiveSpec& adaptive, KzParams kz,
                            WindowKind preferred_kind, double alpha, int top = 5);

}  // namespace kzp

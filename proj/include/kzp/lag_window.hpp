#pragma once

#include "kzp/core.hpp"

namespace kzp {

// Static lag window with truncation point M. The df and bandwidth constants
// are tied to the window kind: 1, 2.5, 2.67, 3 and 3.7 for rectangular,
// Tukey-Hamming, Tukey-Hanning, Bartlett and Parzen respectively.
struct StaticWindowSpec {
    WindowKind kind = WindowKind::bartlett;
    int truncation = 1;  // M >= 1

    double df_constant() const;
    double bandwidth_constant() const;
};

// Continuous lag-weight function W(x) on [-1, 1] for the window kind.
double lag_weight(WindowKind kind, double x);

// Equivalent degrees of freedom via the tabulated constant: df_constant * n / M.
double equivalent_df(WindowKind kind, int n, int truncation);

// Equivalent degrees of freedom from first principles:
// 2n / (M * integral of W^2 over [-1, 1]), by adaptive quadrature. Agrees
// with equivalent_df within 1% for all five kinds.
double equivalent_df_numeric(WindowKind kind, int n, int truncation);

// Frequency-domain width of the smoothing window, bandwidth_constant * pi / M
// radians per sample.
RadianFrequency bandwidth(WindowKind kind, int truncation);

// Peak gain of the spectral window for a pure sinusoid: sum of W(h/M) over
// |h| <= M. A sinusoid of amplitude a contributes approximately a^2/4 times
// this gain to the estimate at its frequency, which calibrates amplitude
// readings from static-smoothed ordinates.
double window_peak_gain(WindowKind kind, int truncation);

// Lag-window log-spectral estimate on the given grid with constant-width
// chi-square confidence bounds. Autocovariances are mean-subtracted with
// divisor n; nonpositive spectral estimates are clamped to 1e-300 before the
// log transform and flagged.
SmoothedPeriodogram static_smoothed_log_periodogram(const TimeSeries& y,
                                                    const StaticWindowSpec& spec,
                                                    const FrequencyGrid& grid, double alpha);

}  // namespace kzp

#pragma once

#include <string>
#include <vector>

#include "kzp/core.hpp"

namespace kzp {

// Truncation-point design range for one static window kind, given the series
// length and the smallest radian gap between frequencies to be resolved.
// feasible <=> lower_m < upper_m <=> delta_lambda > 6*pi/n; the integer
// summary points are meaningful only when feasible.
struct BoundsReport {
    WindowKind kind = WindowKind::rectangular;
    int n = 0;
    double delta_lambda = 0.0;  // radians
    double lower_m = 0.0;       // inclusive bound, bandwidth_constant * pi / gap
    double upper_m = 0.0;       // exclusive bound, df_constant * n / 6
    bool feasible = false;
    int m_min = 0;     // ceil(lower_m)
    int m_median = 0;  // floor((m_min + m_max) / 2)
    int m_max = 0;     // largest integer strictly below upper_m
};

// Smallest radian gap a static window can resolve while staying more precise
// than the narrowest dynamic window: 6*pi/n (exclusive).
double static_resolution_limit(int n);

BoundsReport truncation_bounds(WindowKind kind, int n, double delta_lambda);

// Whether static smoothing can separate two radian frequencies at least as
// well as a dynamic window: strict |lambda_b - lambda_a| > 6*pi/n.
bool resolvable_by_static(int n, double lambda_a, double lambda_b);

// One row of the CI-width comparison dataset: either the dynamic series
// (series "dynamic", x = window width) or a static kind evaluated at its
// minimum / median / maximum truncation point (x = M).
struct CiCurvePoint {
    std::string series;
    int x;
    double nu;
    double width;
};

// The comparison dataset behind the width-versus-window-width figures:
// dynamic widths ci_width(2w, alpha) for odd w in 3..floor(pos*n), plus each
// static kind at the three summary truncation points for a gap of pi.
std::vector<CiCurvePoint> ci_comparison_curves(int n, double pos, double alpha);

constexpr WindowKind kAllWindowKinds[5] = {WindowKind::rectangular, WindowKind::tukey_hamming,
                                           WindowKind::tukey_hanning, WindowKind::bartlett,
                                           WindowKind::parzen};

}  // namespace kzp

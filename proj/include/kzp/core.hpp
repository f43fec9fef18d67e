#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace kzp {

// Uniformly sampled, real-valued series. All downstream estimators assume
// finite values and at least two observations; use validate_series() to
// construct from untrusted input.
struct TimeSeries {
    std::vector<double> values;
    double sample_interval = 1.0;  // time units per step

    std::size_t size() const { return values.size(); }
};

// Checks length >= 2, finiteness of every value (reporting the first bad
// index), and a positive sample interval.
TimeSeries validate_series(std::vector<double> values, double sample_interval = 1.0);

// Ascending, uniformly spaced frequencies in cycles per sample, starting at 0
// and capped at the Nyquist frequency 0.5.
struct FrequencyGrid {
    std::vector<double> frequencies;
    double spacing = 0.0;

    std::size_t size() const { return frequencies.size(); }
};

// Throws if the grid violates its invariants (first element 0, strictly
// ascending, uniform spacing within 1e-12, all within [0, 0.5]).
void validate_grid(const FrequencyGrid& grid);

// Frequency expressed in radians per sample. Locations live in [0, pi];
// bandwidths and gaps reuse the type but may exceed pi for tiny windows.
struct RadianFrequency {
    double value = 0.0;
};

// Converts a cycles-per-sample frequency in [0, 0.5] to radians per sample.
// Linear: to_radian(a*f) == a*to_radian(f).
RadianFrequency to_radian(double cycles_per_sample);

// Raw (unsmoothed) periodogram ordinates over a frequency grid, tagged with
// the KZ Fourier transform parameters that produced them.
struct RawPeriodogram {
    FrequencyGrid grid;
    std::vector<double> ordinates;  // power units, nonnegative
    int window_width = 0;           // m, base window width
    int iterations = 0;             // k, KZFT iterations
};

void validate_raw_periodogram(const RawPeriodogram& raw);

enum class SmoothFamily { dz, nz, static_window };

enum class WindowKind { rectangular, tukey_hamming, tukey_hanning, bartlett, parzen };

const char* window_name(WindowKind kind);

// Inverse of window_name; also accepts the short forms "hamming"/"hanning".
WindowKind window_kind_from_name(const std::string& name);

// Tag recording how a periodogram was smoothed: DZ, NZ, or STATIC(kind, M).
struct SmoothMethod {
    SmoothFamily family = SmoothFamily::dz;
    WindowKind kind = WindowKind::rectangular;  // static only
    int truncation = 0;                         // static only

    std::string to_string() const;
};

// Smoothed periodogram with per-frequency confidence bounds. Ordinates are
// natural-log power when log_scale is set, raw power otherwise. half_widths
// holds the selected smoothing half-width m[i]; realized_lengths holds the
// ordinate count M[i] actually credited to the window (after boundary
// clamping and the minimum-window floor), which drives the degrees of
// freedom 2*M[i]. floored marks frequencies whose ordinates were clamped to
// 1e-300 before the log transform.
struct SmoothedPeriodogram {
    FrequencyGrid grid;
    std::vector<double> ordinates;
    bool log_scale = true;
    std::vector<int> half_widths;
    std::vector<int> realized_lengths;
    std::vector<double> ci_lower;
    std::vector<double> ci_upper;
    double alpha = 0.05;
    SmoothMethod method;
    std::vector<char> floored;

    std::size_t size() const { return ordinates.size(); }
};

// Checks the cross-field invariants: equal lengths, half_widths >= 1,
// realized_lengths <= 2*half_widths - 1, and ci_lower <= ordinate <= ci_upper
// at every frequency.
void validate_smoothed(const SmoothedPeriodogram& sp);

}  // namespace kzp

#pragma once

#include <span>
#include <vector>

#include "kzp/core.hpp"

namespace kzp {

enum class AdaptiveMethod { dz, nz };

// Degrees-of-freedom convention for the dynamic window at frequency i:
//   realized_length: nu = 2 * M[i], M[i] the clamped/floored ordinate count
//                    actually averaged (the reference-code convention);
//   nominal_width:   nu = 4 * m[i] + 2, read off the selected half-width as
//                    if the window were the full 2m+1 ordinates.
enum class DfConvention { realized_length, nominal_width };

struct AdaptiveSpec {
    AdaptiveMethod method = AdaptiveMethod::dz;
    double smooth_level = 0.05;  // proportion of smoothness, in (0, 1)
    double alpha = 0.05;         // in (0, 1)
    bool log_scale = true;
    // Floor the realized window length at 3 away from the grid boundary, so
    // interior degrees of freedom never drop below 6. Disable to reproduce
    // the unfloored reference behaviour exactly.
    bool min_window3 = true;
    DfConvention df_convention = DfConvention::realized_length;
};

// Cumulative variation of the window centred at i with half-width j:
// sum of squared deviations from the window mean (DZ) or the residual sum of
// squares of the least-squares line over the window (NZ). Windows are
// index ranges [max(1, i-j+1), min(n, i+j-1)], 1-based. Values are evaluated
// on demand from prefix sums, in O(1) per query.
class VariationProfile {
public:
    VariationProfile(std::span<const double> p, AdaptiveMethod method);

    // v(i, j) for 1 <= i, j <= size(); nondecreasing in j, v(i, 1) == 0.
    double value(int i, int j) const;

    // The same variation functional over the full sequence.
    double total() const { return total_; }

    int size() const { return n_; }
    AdaptiveMethod method() const { return method_; }

private:
    double window_variation(int lo, int hi) const;

    AdaptiveMethod method_;
    int n_;
    bool all_equal_ = false;
    std::vector<double> sum_p_, sum_pp_, sum_tp_;
    double total_;
};

VariationProfile variation_profile(std::span<const double> p, AdaptiveMethod method);

// Half-width selection: m[i] = #{ j in 1..n : v(i, j) <= smooth_level * total }.
// Always at least 1; equal to n when the sequence has no variation.
std::vector<int> select_halfwidths(const VariationProfile& profile, double smooth_level);

// Dynamic smoothing of the (log-)periodogram with per-frequency chi-square
// confidence bounds. Ordinates equal to zero are clamped to 1e-300 before the
// log transform and flagged.
SmoothedPeriodogram smooth_with_cis(const RawPeriodogram& raw, const AdaptiveSpec& spec);

// One row of the top-peak summary. Values are rounded to the requested number
// of significant digits.
struct PeakSummary {
    double frequency;
    double period;  // 1 / frequency
    double value;
    double ci_lower;
    double ci_upper;
};

// Local maxima of the smoothed ordinates (strictly greater than both
// neighbouring values; a plateau counts once, at its leftmost index; grid
// endpoints never qualify), ranked by ordinate descending and truncated to
// `top` entries. Returns an empty list when there is no interior maximum.
std::vector<PeakSummary> summary_top(const SmoothedPeriodogram& sp, int digits, int top);

}  // namespace kzp

#include "kzp/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "kzp/chisq.hpp"

namespace kzp {

namespace {

constexpr double kLogFloor = 1e-300;

void check_spec(const AdaptiveSpec& spec) {
    if (!(spec.smooth_level > 0.0 && spec.smooth_level < 1.0)) {
        throw std::invalid_argument("smooth_level must lie in (0, 1)");
    }
    if (!(spec.alpha > 0.0 && spec.alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
}

double round_significant(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

}  // namespace

VariationProfile::VariationProfile(std::span<const double> p, AdaptiveMethod method)
    : method_(method), n_(static_cast<int>(p.size())) {
    if (n_ < 3) throw std::invalid_argument("variation profile needs at least 3 ordinates");
    for (int i = 0; i < n_; ++i) {
        if (!std::isfinite(p[static_cast<std::size_t>(i)])) {
            throw std::invalid_argument("variation profile input is not finite at index " +
                                        std::to_string(i));
        }
    }
    sum_p_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
    sum_pp_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
    sum_tp_.assign(static_cast<std::size_t>(n_) + 1, 0.0);
    all_equal_ = true;
    for (int t = 1; t <= n_; ++t) {
        const double v = p[static_cast<std::size_t>(t - 1)];
        all_equal_ = all_equal_ && v == p[0];
        sum_p_[t] = sum_p_[t - 1] + v;
        sum_pp_[t] = sum_pp_[t - 1] + v * v;
        sum_tp_[t] = sum_tp_[t - 1] + static_cast<double>(t) * v;
    }
    total_ = window_variation(1, n_);
}

double VariationProfile::window_variation(int lo, int hi) const {
    const int count = hi - lo + 1;
    // A constant sequence has zero variation exactly; bypass the prefix-sum
    // formula, whose cancellation residue would otherwise leak through.
    if (count <= 1 || all_equal_) return 0.0;
    const double c = static_cast<double>(count);
    const double sp = sum_p_[hi] - sum_p_[lo - 1];
    const double spp = sum_pp_[hi] - sum_pp_[lo - 1];
    const double syy = spp - sp * sp / c;
    if (method_ == AdaptiveMethod::dz) {
        return std::max(syy, 0.0);
    }
    if (count == 2) return 0.0;  // a line fits two points exactly
    // Closed-form index sums over lo..hi for the regression on t.
    const double sx = 0.5 * c * static_cast<double>(lo + hi);
    const double a = static_cast<double>(lo) - 1.0;
    const double b = static_cast<double>(hi);
    const double sxx = b * (b + 1.0) * (2.0 * b + 1.0) / 6.0 - a * (a + 1.0) * (2.0 * a + 1.0) / 6.0;
    const double sxy = sum_tp_[hi] - sum_tp_[lo - 1];
    const double varx = sxx - sx * sx / c;
    const double covxy = sxy - sx * sp / c;
    const double rss = syy - covxy * covxy / varx;
    return std::max(rss, 0.0);
}

double VariationProfile::value(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw std::out_of_range("variation profile index out of range");
    }
    const int lo = std::max(1, i - j + 1);
    const int hi = std::min(n_, i + j - 1);
    return window_variation(lo, hi);
}

VariationProfile variation_profile(std::span<const double> p, AdaptiveMethod method) {
    return VariationProfile(p, method);
}

std::vector<int> select_halfwidths(const VariationProfile& profile, double smooth_level) {
    if (!(smooth_level > 0.0 && smooth_level < 1.0)) {
        throw std::invalid_argument("smooth_level must lie in (0, 1)");
    }
    const int n = profile.size();
    const double threshold = smooth_level * profile.total();
    std::vector<int> halfwidths(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        int count = 0;
        for (int j = 1; j <= n; ++j) {
            if (profile.value(i, j) <= threshold) ++count;
        }
        halfwidths[static_cast<std::size_t>(i - 1)] = count;
    }
    return halfwidths;
}

SmoothedPeriodogram smooth_with_cis(const RawPeriodogram& raw, const AdaptiveSpec& spec) {
    validate_raw_periodogram(raw);
    check_spec(spec);
    const int n = static_cast<int>(raw.ordinates.size());
    if (n < 3) throw std::invalid_argument("smooth_with_cis needs at least 3 ordinates");

    std::vector<double> p(raw.ordinates.size());
    std::vector<char> floored(raw.ordinates.size(), 0);
    if (spec.log_scale) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            double v = raw.ordinates[i];
            if (v < kLogFloor) {
                v = kLogFloor;
                floored[i] = 1;
            }
            p[i] = std::log(v);
        }
    } else {
        p = raw.ordinates;
    }

    const VariationProfile profile(p, spec.method);
    const std::vector<int> halfwidths = select_halfwidths(profile, spec.smooth_level);

    SmoothedPeriodogram sp;
    sp.grid = raw.grid;
    sp.log_scale = spec.log_scale;
    sp.alpha = spec.alpha;
    sp.method.family =
        spec.method == AdaptiveMethod::dz ? SmoothFamily::dz : SmoothFamily::nz;
    sp.ordinates.resize(p.size());
    sp.half_widths.resize(p.size());
    sp.realized_lengths.resize(p.size());
    sp.ci_lower.resize(p.size());
    sp.ci_upper.resize(p.size());
    sp.floored = std::move(floored);

    std::map<long long, Interval> offset_cache;  // nu -> CI offsets about 0
    for (int i = 1; i <= n; ++i) {
        const int m = halfwidths[static_cast<std::size_t>(i - 1)];
        const int lo = std::max(1, i - m + 1);
        const int hi = std::min(n, i + m - 1);
        double mean = 0.0;
        for (int t = lo; t <= hi; ++t) mean += p[static_cast<std::size_t>(t - 1)];
        mean /= static_cast<double>(hi - lo + 1);

        int realized = hi - lo + 1;
        if (spec.min_window3 && spec.df_convention == DfConvention::realized_length) {
            // Credit at least the symmetric 3-point window, clamped at the
            // grid boundary; keeps interior degrees of freedom at 6 or more.
            // The floor is a realized-length notion, so it does not apply
            // under the nominal-width convention (whose nu is already >= 6).
            const int floor_len = std::min(n, i + 1) - std::max(1, i - 1) + 1;
            realized = std::max(realized, floor_len);
        }

        const long long nu_key = spec.df_convention == DfConvention::realized_length
                                     ? 2LL * realized
                                     : 4LL * m + 2;
        auto it = offset_cache.find(nu_key);
        if (it == offset_cache.end()) {
            const double nu = static_cast<double>(nu_key);
            it = offset_cache.emplace(nu_key, ci_bounds(0.0, ConfidenceSpec{spec.alpha, nu})).first;
        }

        const std::size_t idx = static_cast<std::size_t>(i - 1);
        sp.ordinates[idx] = mean;
        sp.half_widths[idx] = std::max(m, (realized + 2) / 2);
        sp.realized_lengths[idx] = realized;
        sp.ci_lower[idx] = mean + it->second.lower;
        sp.ci_upper[idx] = mean + it->second.upper;
    }
    validate_smoothed(sp);
    return sp;
}

std::vector<PeakSummary> summary_top(const SmoothedPeriodogram& sp, int digits, int top) {
    if (top < 1) throw std::invalid_argument("summary_top: top must be at least 1");
    if (digits < 1) throw std::invalid_argument("summary_top: digits must be at least 1");
    const std::size_t n = sp.ordinates.size();

    // Plateau-aware interior maxima: each run of equal values is a candidate
    // represented by its leftmost index.
    std::vector<std::size_t> peaks;
    std::size_t run_start = 0;
    while (run_start < n) {
        std::size_t run_end = run_start;
        while (run_end + 1 < n && sp.ordinates[run_end + 1] == sp.ordinates[run_start]) ++run_end;
        if (run_start > 0 && run_end + 1 < n &&
            sp.ordinates[run_start] > sp.ordinates[run_start - 1] &&
            sp.ordinates[run_start] > sp.ordinates[run_end + 1]) {
            peaks.push_back(run_start);
        }
        run_start = run_end + 1;
    }

    std::stable_sort(peaks.begin(), peaks.end(), [&sp](std::size_t a, std::size_t b) {
        return sp.ordinates[a] > sp.ordinates[b];
    });
    if (peaks.size() > static_cast<std::size_t>(top)) {
        peaks.resize(static_cast<std::size_t>(top));
    }

    std::vector<PeakSummary> out;
    out.reserve(peaks.size());
    for (const std::size_t i : peaks) {
        const double f = sp.grid.frequencies[i];
        if (f == 0.0) continue;  // period undefined; cannot occur for interior maxima
        out.push_back(PeakSummary{round_significant(f, digits), round_significant(1.0 / f, digits),
                                  round_significant(sp.ordinates[i], digits),
                                  round_significant(sp.ci_lower[i], digits),
                                  round_significant(sp.ci_upper[i], digits)});
    }
    return out;
}

}  // namespace kzp

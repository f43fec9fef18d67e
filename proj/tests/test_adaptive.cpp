#include <doctest.h>

#include <cmath>
#include <vector>

#include "kzp/adaptive.hpp"
#include "kzp/chisq.hpp"
#include "kzp/kzft.hpp"
#include "kzp/rng.hpp"
#include "kzp/simulate.hpp"

#include "oracles.hpp"

using namespace kzp;

namespace {

RawPeriodogram make_raw(std::vector<double> ordinates) {
    const std::size_t n = ordinates.size();
    std::vector<double> freqs(n);
    for (std::size_t i = 0; i < n; ++i) freqs[i] = 0.5 * static_cast<double>(i) / (n - 1);
    return RawPeriodogram{FrequencyGrid{std::move(freqs), 0.5 / (n - 1)}, std::move(ordinates),
                          static_cast<int>(2 * (n - 1)), 1};
}

}  // namespace

TEST_CASE("variation profile basics") {
    const std::vector<double> constant(8, 3.5);
    for (const auto method : {AdaptiveMethod::dz, AdaptiveMethod::nz}) {
        const VariationProfile prof(constant, method);
        CHECK(prof.total() == 0.0);
        for (int i = 1; i <= prof.size(); ++i) {
            for (int j = 1; j <= prof.size(); ++j) {
                CHECK(prof.value(i, j) == 0.0);
            }
        }
    }

    // A perfect line has zero departure from linearity but positive variance.
    std::vector<double> line(10);
    for (std::size_t t = 0; t < line.size(); ++t) line[t] = 2.0 * static_cast<double>(t + 1);
    CHECK(VariationProfile(line, AdaptiveMethod::nz).total() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(VariationProfile(line, AdaptiveMethod::dz).total() > 0.0);

    // Hand value: window [2..4] of [0,0,1,0,0] about mean 1/3.
    const std::vector<double> bump{0.0, 0.0, 1.0, 0.0, 0.0};
    const VariationProfile dz(bump, AdaptiveMethod::dz);
    CHECK(dz.value(3, 2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(dz.value(3, 1) == 0.0);

    CHECK_THROWS(variation_profile(std::vector<double>{1.0, 2.0}, AdaptiveMethod::dz));
}

TEST_CASE("variation profile is nondecreasing in the half-width") {
    Xoshiro256pp rng(5);
    std::vector<double> p(40);
    for (auto& v : p) v = rng.uniform_symmetric();
    for (const auto method : {AdaptiveMethod::dz, AdaptiveMethod::nz}) {
        const VariationProfile prof(p, method);
        for (int i = 1; i <= prof.size(); ++i) {
            CHECK(prof.value(i, 1) == 0.0);
            for (int j = 2; j <= prof.size(); ++j) {
                CHECK(prof.value(i, j) >= prof.value(i, j - 1) - 1e-12);
            }
        }
    }
}

TEST_CASE("select_halfwidths threshold behaviour") {
    // Constant input: every window qualifies.
    const std::vector<double> constant(12, 1.0);
    const VariationProfile prof(constant, AdaptiveMethod::dz);
    for (const int m : select_halfwidths(prof, 0.3)) CHECK(m == 12);

    // A sharp spike confines the window at its own bin.
    const std::vector<double> spike{0.0, 0.0, 10.0, 0.0, 0.0};
    const VariationProfile sp(spike, AdaptiveMethod::dz);
    const auto widths = select_halfwidths(sp, 1e-4);
    CHECK(widths[2] == 1);

    // Raising the level never shrinks a window.
    Xoshiro256pp rng(17);
    std::vector<double> p(30);
    for (auto& v : p) v = rng.uniform_symmetric();
    const VariationProfile rp(p, AdaptiveMethod::nz);
    const auto narrow = select_halfwidths(rp, 0.02);
    const auto wide = select_halfwidths(rp, 0.2);
    for (std::size_t i = 0; i < narrow.size(); ++i) CHECK(wide[i] >= narrow[i]);
}

TEST_CASE("smooth_with_cis on a constant log-periodogram") {
    // exp(c) ordinates: the log-periodogram is constant, so every window spans
    // the full grid and the CI width is ci_width(202, alpha) everywhere.
    const double c = 1.7;
    const int n = 101;
    const RawPeriodogram raw = make_raw(std::vector<double>(n, std::exp(c)));
    AdaptiveSpec spec;
    spec.smooth_level = 0.05;
    const SmoothedPeriodogram sp = smooth_with_cis(raw, spec);
    const double expected_width = ci_width(202.0, 0.05);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        CHECK(sp.ordinates[i] == doctest::Approx(c).epsilon(1e-12));
        CHECK(sp.realized_lengths[i] == 101);
        CHECK(sp.ci_upper[i] - sp.ci_lower[i] == doctest::Approx(expected_width).epsilon(1e-10));
        CHECK(sp.floored[i] == 0);
    }
}

TEST_CASE("bracket property and zero-ordinate flooring") {
    std::vector<double> ords(21, 1.0);
    ords[4] = 0.0;  // legitimately zero ordinate must be floored and flagged
    ords[9] = 25.0;
    const RawPeriodogram raw = make_raw(std::move(ords));
    for (const auto method : {AdaptiveMethod::dz, AdaptiveMethod::nz}) {
        AdaptiveSpec spec;
        spec.method = method;
        const SmoothedPeriodogram sp = smooth_with_cis(raw, spec);
        CHECK(sp.floored[4] == 1);
        for (std::size_t i = 0; i < sp.size(); ++i) {
            CHECK(sp.ci_lower[i] < sp.ordinates[i]);
            CHECK(sp.ordinates[i] < sp.ci_upper[i]);
        }
    }
}

TEST_CASE("CI width depends only on the realized length and alpha") {
    Xoshiro256pp rng(23);
    std::vector<double> ords(41);
    for (auto& v : ords) v = std::exp(rng.uniform_symmetric());
    AdaptiveSpec spec;
    const SmoothedPeriodogram sp = smooth_with_cis(make_raw(std::move(ords)), spec);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        for (std::size_t j = i + 1; j < sp.size(); ++j) {
            const double wi = sp.ci_upper[i] - sp.ci_lower[i];
            const double wj = sp.ci_upper[j] - sp.ci_lower[j];
            if (sp.realized_lengths[i] == sp.realized_lengths[j]) {
                CHECK(wi == doctest::Approx(wj).epsilon(1e-12));
            } else if (sp.realized_lengths[i] < sp.realized_lengths[j]) {
                CHECK(wi > wj);
            } else {
                CHECK(wi < wj);
            }
        }
    }
}

TEST_CASE("DZ and NZ widths coincide at equal realized lengths") {
    Xoshiro256pp rng(29);
    std::vector<double> ords(37);
    for (auto& v : ords) v = std::exp(rng.uniform_symmetric());
    const RawPeriodogram raw = make_raw(std::move(ords));
    AdaptiveSpec dz;
    AdaptiveSpec nz;
    nz.method = AdaptiveMethod::nz;
    const SmoothedPeriodogram a = smooth_with_cis(raw, dz);
    const SmoothedPeriodogram b = smooth_with_cis(raw, nz);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.realized_lengths[i] == b.realized_lengths[i]) {
            CHECK(a.ci_upper[i] - a.ci_lower[i] ==
                  doctest::Approx(b.ci_upper[i] - b.ci_lower[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("single-signal scenario: maximum CI width sits at the signal bin") {
    const SignalSpec signal{0.444, 3.58, 0.0};
    const NoiseSpec noise{16.0, 42};
    const TimeSeries y = generate_series(5000, std::span(&signal, 1), noise);
    const RawPeriodogram raw = raw_periodogram(y, 500, 1);
    AdaptiveSpec spec;  // DZ, 0.05, alpha 0.05, log scale
    const SmoothedPeriodogram sp = smooth_with_cis(raw, spec);

    const std::size_t bin = 222;  // 0.444 * 500
    CHECK(raw.grid.frequencies[bin] == doctest::Approx(0.444).epsilon(1e-12));
    double max_width = 0.0;
    for (std::size_t i = 0; i < sp.size(); ++i) {
        max_width = std::max(max_width, sp.ci_upper[i] - sp.ci_lower[i]);
    }
    const double peak_width = sp.ci_upper[bin] - sp.ci_lower[bin];
    CHECK(peak_width == doctest::Approx(max_width).epsilon(1e-12));
    // Away from the signal the band must be strictly narrower.
    CHECK(sp.ci_upper[50] - sp.ci_lower[50] < peak_width);
}

TEST_CASE("appendix transliteration agreement (floor disabled)") {
    Xoshiro256pp rng(31);
    for (int round = 0; round < 40; ++round) {
        const int n = 8 + static_cast<int>(rng.next() % 57);  // 8..64
        std::vector<double> ords(static_cast<std::size_t>(n));
        for (auto& v : ords) v = std::exp(2.0 * rng.uniform_symmetric());
        const bool use_nz = round % 2 == 1;

        AdaptiveSpec spec;
        spec.method = use_nz ? AdaptiveMethod::nz : AdaptiveMethod::dz;
        spec.smooth_level = 0.1;
        spec.min_window3 = false;
        const SmoothedPeriodogram sp = smooth_with_cis(make_raw(ords), spec);

        const auto ref = oracle::appendix_smooth(ords, true, 0.1, use_nz, 0.05, chisq_quantile);
        for (int i = 0; i < n; ++i) {
            const std::size_t idx = static_cast<std::size_t>(i);
            CHECK(sp.half_widths[idx] == ref.halfwidths[idx]);
            CHECK(sp.ordinates[idx] == doctest::Approx(ref.smoothed[idx]).epsilon(1e-12));
            CHECK(sp.ci_upper[idx] == doctest::Approx(ref.upper[idx]).epsilon(1e-12));
            CHECK(sp.ci_lower[idx] == doctest::Approx(ref.lower[idx]).epsilon(1e-12));
        }
    }
}

TEST_CASE("df conventions") {
    std::vector<double> ords(21, 1.0);
    ords[10] = 40.0;
    const RawPeriodogram raw = make_raw(std::move(ords));

    AdaptiveSpec nominal;
    nominal.df_convention = DfConvention::nominal_width;
    const SmoothedPeriodogram a = smooth_with_cis(raw, nominal);
    AdaptiveSpec realized;
    const SmoothedPeriodogram b = smooth_with_cis(raw, realized);
    for (std::size_t i = 0; i < a.size(); ++i) {
        // Under the nominal convention the bounds come from nu = 4m+2 and the
        // realized-length floor does not apply.
        const double nu = 4.0 * a.half_widths[i] + 2.0;
        const Interval iv = ci_bounds(a.ordinates[i], ConfidenceSpec{a.alpha, nu});
        CHECK(a.ci_upper[i] == doctest::Approx(iv.upper).epsilon(1e-12));
        CHECK(a.ci_lower[i] == doctest::Approx(iv.lower).epsilon(1e-12));
        CHECK(a.realized_lengths[i] <= 2 * a.half_widths[i] - 1);
        // The default realized convention floors interior lengths at 3.
        CHECK(b.realized_lengths[i] >= (i == 0 || i + 1 == b.size() ? 2 : 3));
    }
}

TEST_CASE("summary_top peaks, plateaus and rounding") {
    SmoothedPeriodogram sp;
    sp.grid = FrequencyGrid{{0.0, 0.1, 0.2, 0.3, 0.4}, 0.1};
    sp.ordinates = {0.0, 1.0, 0.0, 2.0, 0.0};
    sp.log_scale = true;
    sp.half_widths = {1, 1, 1, 1, 1};
    sp.realized_lengths = {1, 1, 1, 1, 1};
    sp.ci_lower = {-1.0, 0.0, -1.0, 1.0, -1.0};
    sp.ci_upper = {1.0, 2.0, 1.0, 3.0, 1.0};
    sp.alpha = 0.05;
    sp.floored.assign(5, 0);

    auto peaks = summary_top(sp, 6, 5);
    REQUIRE(peaks.size() == 2);
    CHECK(peaks[0].frequency == doctest::Approx(0.3));
    CHECK(peaks[0].period == doctest::Approx(1.0 / 0.3).epsilon(1e-5));
    CHECK(peaks[1].frequency == doctest::Approx(0.1));

    // top truncation
    CHECK(summary_top(sp, 6, 1).size() == 1);

    // monotone ordinates: no interior maxima
    sp.ordinates = {0.0, 1.0, 2.0, 3.0, 4.0};
    sp.ci_lower = {-1.0, 0.0, 1.0, 2.0, 3.0};
    sp.ci_upper = {1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(summary_top(sp, 6, 3).empty());

    // plateau counts once, at its left edge
    sp.ordinates = {0.0, 5.0, 5.0, 5.0, 0.0};
    sp.ci_lower = {-1.0, 4.0, 4.0, 4.0, -1.0};
    sp.ci_upper = {1.0, 6.0, 6.0, 6.0, 1.0};
    peaks = summary_top(sp, 6, 5);
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].frequency == doctest::Approx(0.1));

    // three-point grid with a single middle peak
    SmoothedPeriodogram tiny;
    tiny.grid = FrequencyGrid{{0.0, 0.25, 0.5}, 0.25};
    tiny.ordinates = {0.0, 1.0, 0.0};
    tiny.half_widths = {1, 1, 1};
    tiny.realized_lengths = {1, 1, 1};
    tiny.ci_lower = {-1.0, 0.5, -1.0};
    tiny.ci_upper = {1.0, 1.5, 1.0};
    tiny.alpha = 0.05;
    tiny.floored.assign(3, 0);
    peaks = summary_top(tiny, 4, 3);
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].frequency == doctest::Approx(0.25));
    CHECK(peaks[0].period == doctest::Approx(4.0));

    CHECK_THROWS(summary_top(tiny, 4, 0));
}

#include <doctest.h>

#include <cmath>

#include "kzp/simulate.hpp"

using namespace kzp;

TEST_CASE("snr reproduces the scenario values") {
    const SignalSpec one{0.444, 3.58, 0.0};
    CHECK(snr(std::span(&one, 1), NoiseSpec{16.0, 0}) == doctest::Approx(0.05006).epsilon(1e-4));

    const SignalSpec two[2] = {{0.400, 8.0, 0.0}, {0.380, 4.0, 0.0}};
    CHECK(snr(std::span(two, 2), NoiseSpec{16.0, 0}) == 0.3125);

    CHECK(snr(std::span<const SignalSpec>{}, NoiseSpec{16.0, 0}) == 0.0);
}

TEST_CASE("snr is scale invariant") {
    const SignalSpec base[2] = {{0.1, 2.0, 0.0}, {0.2, 1.0, 0.0}};
    const SignalSpec scaled[2] = {{0.1, 6.0, 0.0}, {0.2, 3.0, 0.0}};
    CHECK(snr(std::span(base, 2), NoiseSpec{4.0, 0}) ==
          doctest::Approx(snr(std::span(scaled, 2), NoiseSpec{12.0, 0})).epsilon(1e-15));
}

TEST_CASE("generate_series is deterministic and bounded") {
    const SignalSpec signal{0.1, 1.0, 0.3};
    const NoiseSpec noise{2.0, 12345};
    const TimeSeries a = generate_series(500, std::span(&signal, 1), noise);
    const TimeSeries b = generate_series(500, std::span(&signal, 1), noise);
    REQUIRE(a.size() == 500);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.values[i] == b.values[i]);

    const TimeSeries c = generate_series(500, std::span(&signal, 1), NoiseSpec{2.0, 54321});
    bool differs = false;
    for (std::size_t i = 0; i < c.size(); ++i) differs |= (c.values[i] != a.values[i]);
    CHECK(differs);

    // Uniform noise stays within amplitude + signal bounds.
    for (const double v : a.values) CHECK(std::fabs(v) <= 3.0);
}

TEST_CASE("vanishing noise leaves the pure signal") {
    const NoiseSpec tiny{1e-12, 7};
    const TimeSeries y = generate_series(1000, std::span<const SignalSpec>{}, tiny);
    double var = 0.0;
    for (const double v : y.values) var += v * v;
    var /= static_cast<double>(y.size());
    CHECK(var <= 1e-20);

    // A single sinusoid has sample variance a^2/2.
    const SignalSpec signal{0.1, 2.0, 0.0};
    const TimeSeries s = generate_series(10000, std::span(&signal, 1), tiny);
    double mean = 0.0;
    for (const double v : s.values) mean += v;
    mean /= static_cast<double>(s.size());
    double power = 0.0;
    for (const double v : s.values) power += (v - mean) * (v - mean);
    power /= static_cast<double>(s.size());
    CHECK(power == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("normal noise variant") {
    const NoiseSpec normal{1.0, 99, NoiseDistribution::normal};
    const TimeSeries y = generate_series(20000, std::span<const SignalSpec>{}, normal);
    double mean = 0.0;
    for (const double v : y.values) mean += v;
    mean /= static_cast<double>(y.size());
    double var = 0.0;
    for (const double v : y.values) var += (v - mean) * (v - mean);
    var /= static_cast<double>(y.size());
    CHECK(mean == doctest::Approx(0.0).epsilon(0.05));
    CHECK(var == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("spec validation") {
    const SignalSpec bad_freq{0.6, 1.0, 0.0};
    CHECK_THROWS(generate_series(100, std::span(&bad_freq, 1), NoiseSpec{1.0, 0}));
    const SignalSpec bad_amp{0.1, -1.0, 0.0};
    CHECK_THROWS(generate_series(100, std::span(&bad_amp, 1), NoiseSpec{1.0, 0}));
    CHECK_THROWS(generate_series(100, std::span<const SignalSpec>{}, NoiseSpec{0.0, 0}));
    CHECK_THROWS(generate_series(1, std::span<const SignalSpec>{}, NoiseSpec{1.0, 0}));
}

#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "kzp/adaptive.hpp"
#include "kzp/csv.hpp"
#include "kzp/kzft.hpp"
#include "kzp/simulate.hpp"
#include "kzp/svg_plot.hpp"

using namespace kzp;

TEST_CASE("series CSV round trip reproduces the in-memory pipeline") {
    const SignalSpec signal{0.2, 1.5, 0.0};
    const NoiseSpec noise{2.0, 31};
    const TimeSeries y = generate_series(400, std::span(&signal, 1), noise);

    std::ostringstream out;
    write_series_csv(out, y);
    std::istringstream in(out.str());
    const TimeSeries back = read_series_csv(in);
    REQUIRE(back.size() == y.size());
    for (std::size_t i = 0; i < y.size(); ++i) CHECK(back.values[i] == y.values[i]);

    const RawPeriodogram direct = raw_periodogram(y, 40, 2);
    const RawPeriodogram via_csv = raw_periodogram(back, 40, 2);
    for (std::size_t i = 0; i < direct.ordinates.size(); ++i) {
        CHECK(direct.ordinates[i] == via_csv.ordinates[i]);
    }
}

TEST_CASE("series CSV accepts one column, headers, and --no-header") {
    std::istringstream one_col("value\n1.5\n2.5\n3.5\n");
    CHECK(read_series_csv(one_col).values == std::vector<double>{1.5, 2.5, 3.5});

    std::istringstream no_header("1.5\n2.5\n");
    CHECK(read_series_csv(no_header, true).values == std::vector<double>{1.5, 2.5});

    std::istringstream two_col("index,value\n1,10.0\n2,20.0\n");
    CHECK(read_series_csv(two_col).values == std::vector<double>{10.0, 20.0});

    std::istringstream bad("index,value\n1,10.0\n2,oops\n");
    CHECK_THROWS(read_series_csv(bad));

    std::istringstream too_wide("1,2,3\n");
    CHECK_THROWS(read_series_csv(too_wide, true));
}

TEST_CASE("tables are byte-stable") {
    const SignalSpec signal{0.1, 2.0, 0.0};
    const NoiseSpec noise{1.0, 8};
    const TimeSeries y = generate_series(300, std::span(&signal, 1), noise);
    const RawPeriodogram raw = raw_periodogram(y, 30, 1);
    const SmoothedPeriodogram sp = smooth_with_cis(raw, AdaptiveSpec{});

    std::ostringstream a, b;
    write_smoothed_csv(a, sp);
    write_smoothed_csv(b, sp);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("frequency,ordinate,ci_lower,ci_upper,half_width,realized_length,"
                        "floor_flag\n", 0) == 0);
}

TEST_CASE("smoothed table round trips for summary") {
    const SignalSpec signal{0.2, 3.0, 0.0};
    const NoiseSpec noise{1.0, 5};
    const TimeSeries y = generate_series(1000, std::span(&signal, 1), noise);
    const RawPeriodogram raw = raw_periodogram(y, 100, 1);
    const SmoothedPeriodogram sp = smooth_with_cis(raw, AdaptiveSpec{});

    std::ostringstream out;
    write_smoothed_csv(out, sp);
    std::istringstream in(out.str());
    const SmoothedPeriodogram back = read_smoothed_csv(in);
    REQUIRE(back.size() == sp.size());
    for (std::size_t i = 0; i < sp.size(); ++i) {
        CHECK(back.ordinates[i] == sp.ordinates[i]);
        CHECK(back.ci_lower[i] == sp.ci_lower[i]);
        CHECK(back.ci_upper[i] == sp.ci_upper[i]);
        CHECK(back.realized_lengths[i] == sp.realized_lengths[i]);
    }

    const auto direct = summary_top(sp, 6, 3);
    const auto via_csv = summary_top(back, 6, 3);
    REQUIRE(direct.size() == via_csv.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
        CHECK(direct[i].frequency == via_csv[i].frequency);
        CHECK(direct[i].value == via_csv[i].value);
    }
    REQUIRE(!direct.empty());
    CHECK(direct[0].frequency == doctest::Approx(0.2));
}

TEST_CASE("format_full survives a parse round trip") {
    for (const double v : {0.1, -3.25e-17, 12345.678901234567, 1e300, 0.0}) {
        CHECK(std::strtod(format_full(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("plot layout and SVG structure") {
    SmoothedPeriodogram sp;
    sp.grid = FrequencyGrid{{0.0, 0.1, 0.2, 0.3, 0.4}, 0.1};
    sp.ordinates = {1.0, 1.0, 1.0, 1.0, 1.0};
    sp.half_widths = {1, 1, 1, 1, 1};
    sp.realized_lengths = {1, 1, 1, 1, 1};
    sp.ci_lower = {0.5, 0.5, 0.5, 0.5, 0.5};
    sp.ci_upper = {2.0, 2.0, 2.0, 2.0, 2.0};
    sp.alpha = 0.05;
    sp.floored.assign(5, 0);

    // Constant curve centers to zero; the y range brackets the centred CI
    // curves by exactly one unit.
    const PlotLayout layout = plot_layout(sp);
    CHECK(layout.center_shift == doctest::Approx(1.0));
    CHECK(layout.y_min == doctest::Approx(0.5 - 1.0 - 1.0));
    CHECK(layout.y_max == doctest::Approx(2.0 - 1.0 + 1.0));

    const std::string svg = render_plot_svg(sp);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("stroke=\"black\"") != std::string::npos);
    CHECK(svg.find("stroke=\"blue\"") != std::string::npos);
    CHECK(svg.find("stroke=\"red\"") != std::string::npos);
    CHECK(svg.find(">Frequency</text>") != std::string::npos);
    CHECK(svg == render_plot_svg(sp));

    CHECK_THROWS(render_plot(sp, "/nonexistent-dir/plot.svg"));
}

// Python bindings over the kzp core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kzp/adaptive.hpp"
#include "kzp/bounds.hpp"
#include "kzp/chisq.hpp"
#include "kzp/core.hpp"
#include "kzp/kzft.hpp"
#include "kzp/lag_window.hpp"
#include "kzp/protocol.hpp"
#include "kzp/simulate.hpp"
#include "kzp/svg_plot.hpp"

namespace py = pybind11;

namespace {

std::vector<kzp::SignalSpec> to_signals(const std::vector<std::vector<double>>& raw) {
    std::vector<kzp::SignalSpec> signals;
    for (const auto& entry : raw) {
        if (entry.size() != 2 && entry.size() != 3) {
            throw std::invalid_argument("each signal must be (frequency, amplitude[, phase])");
        }
        signals.push_back(
            kzp::SignalSpec{entry[0], entry[1], entry.size() == 3 ? entry[2] : 0.0});
    }
    return signals;
}

kzp::NoiseSpec to_noise(double amplitude, std::uint64_t seed, const std::string& distribution) {
    if (distribution == "uniform") {
        return kzp::NoiseSpec{amplitude, seed, kzp::NoiseDistribution::uniform};
    }
    if (distribution == "normal") {
        return kzp::NoiseSpec{amplitude, seed, kzp::NoiseDistribution::normal};
    }
    throw std::invalid_argument("distribution must be 'uniform' or 'normal'");
}

kzp::AdaptiveSpec to_adaptive(const std::string& method, double smooth_level, double alpha,
                              bool log_scale, bool min_window3,
                              const std::string& df_convention) {
    kzp::AdaptiveSpec spec;
    if (method == "dz") {
        spec.method = kzp::AdaptiveMethod::dz;
    } else if (method == "nz") {
        spec.method = kzp::AdaptiveMethod::nz;
    } else {
        throw std::invalid_argument("method must be 'dz' or 'nz'");
    }
    spec.smooth_level = smooth_level;
    spec.alpha = alpha;
    spec.log_scale = log_scale;
    spec.min_window3 = min_window3;
    if (df_convention == "realized") {
        spec.df_convention = kzp::DfConvention::realized_length;
    } else if (df_convention == "nominal") {
        spec.df_convention = kzp::DfConvention::nominal_width;
    } else {
        throw std::invalid_argument("df_convention must be 'realized' or 'nominal'");
    }
    return spec;
}

}  // namespace

PYBIND11_MODULE(kzp, m) {
    m.doc() = "Kolmogorov-Zurbenko periodograms with dynamic and static smoothing";

    py::class_<kzp::RawPeriodogram>(m, "RawPeriodogram")
        .def_property_readonly("frequencies",
                               [](const kzp::RawPeriodogram& r) { return r.grid.frequencies; })
        .def_property_readonly("spacing", [](const kzp::RawPeriodogram& r) { return r.grid.spacing; })
        .def_readonly("ordinates", &kzp::RawPeriodogram::ordinates)
        .def_readonly("window_width", &kzp::RawPeriodogram::window_width)
        .def_readonly("iterations", &kzp::RawPeriodogram::iterations);

    py::class_<kzp::SmoothedPeriodogram>(m, "SmoothedPeriodogram")
        .def_property_readonly("frequencies",
                               [](const kzp::SmoothedPeriodogram& s) { return s.grid.frequencies; })
        .def_readonly("ordinates", &kzp::SmoothedPeriodogram::ordinates)
        .def_readonly("log_scale", &kzp::SmoothedPeriodogram::log_scale)
        .def_readonly("half_widths", &kzp::SmoothedPeriodogram::half_widths)
        .def_readonly("realized_lengths", &kzp::SmoothedPeriodogram::realized_lengths)
        .def_readonly("ci_lower", &kzp::SmoothedPeriodogram::ci_lower)
        .def_readonly("ci_upper", &kzp::SmoothedPeriodogram::ci_upper)
        .def_readonly("alpha", &kzp::SmoothedPeriodogram::alpha)
        .def_property_readonly("method",
                               [](const kzp::SmoothedPeriodogram& s) { return s.method.to_string(); })
        .def_property_readonly("floored", [](const kzp::SmoothedPeriodogram& s) {
            std::vector<bool> out(s.floored.begin(), s.floored.end());
            return out;
        });

    py::class_<kzp::BoundsReport>(m, "BoundsReport")
        .def_property_readonly("window",
                               [](const kzp::BoundsReport& b) { return kzp::window_name(b.kind); })
        .def_readonly("n", &kzp::BoundsReport::n)
        .def_readonly("delta_lambda", &kzp::BoundsReport::delta_lambda)
        .def_readonly("lower_m", &kzp::BoundsReport::lower_m)
        .def_readonly("upper_m", &kzp::BoundsReport::upper_m)
        .def_readonly("feasible", &kzp::BoundsReport::feasible)
        .def_readonly("m_min", &kzp::BoundsReport::m_min)
        .def_readonly("m_median", &kzp::BoundsReport::m_median)
        .def_readonly("m_max", &kzp::BoundsReport::m_max);

    py::class_<kzp::ProtocolReport>(m, "ProtocolReport")
        .def_property_readonly("detected",
                               [](const kzp::ProtocolReport& r) {
                                   std::vector<std::tuple<double, double, double, double>> out;
                                   for (const auto& d : r.detected) {
                                       out.emplace_back(d.frequency, d.ordinate, d.ci.lower,
                                                        d.ci.upper);
                                   }
                                   return out;
                               })
        .def_readonly("min_gap_rad", &kzp::ProtocolReport::min_gap_rad)
        .def_readonly("bounds", &kzp::ProtocolReport::bounds)
        .def_property_readonly("chosen_window",
                               [](const kzp::ProtocolReport& r) {
                                   return kzp::window_name(r.chosen_kind);
                               })
        .def_readonly("chosen_m", &kzp::ProtocolReport::chosen_m)
        .def_property_readonly(
            "strengths",
            [](const kzp::ProtocolReport& r) {
                std::vector<std::tuple<double, double, double, double>> out;
                for (const auto& s : r.strengths) {
                    out.emplace_back(s.frequency, s.amplitude, s.amplitude_ci.lower,
                                     s.amplitude_ci.upper);
                }
                return out;
            })
        .def_readonly("fallback_used", &kzp::ProtocolReport::fallback_used);

    m.def(
        "simulate",
        [](int n, const std::vector<std::vector<double>>& signals, double noise_amplitude,
           std::uint64_t seed, const std::string& distribution) {
            const auto specs = to_signals(signals);
            return kzp::generate_series(n, specs, to_noise(noise_amplitude, seed, distribution))
                .values;
        },
        py::arg("n"), py::arg("signals"), py::arg("noise_amplitude"), py::arg("seed") = 0,
        py::arg("distribution") = "uniform",
        "Seeded series of sinusoids in additive noise; signals are (frequency, amplitude[, phase]).");

    m.def(
        "snr",
        [](const std::vector<std::vector<double>>& signals, double noise_amplitude) {
            const auto specs = to_signals(signals);
            return kzp::snr(specs, kzp::NoiseSpec{noise_amplitude, 0});
        },
        py::arg("signals"), py::arg("noise_amplitude"),
        "Sum of squared signal amplitudes over the squared noise amplitude.");

    m.def(
        "kzft_weights",
        [](int m, int k) { return kzp::kzft_weights(m, k).weights; }, py::arg("m"), py::arg("k"),
        "KZ Fourier transform weights: k-fold self-convolution of a uniform window of width m.");

    m.def(
        "periodogram",
        [](const std::vector<double>& values, int m, int k) {
            return kzp::raw_periodogram(kzp::validate_series(values), m, k);
        },
        py::arg("values"), py::arg("m"), py::arg("k") = 1,
        "Raw KZ periodogram on the grid {j/m}.");

    m.def(
        "smooth",
        [](const kzp::RawPeriodogram& raw, const std::string& method, double smooth_level,
           double alpha, bool log_scale, bool min_window3, const std::string& df_convention) {
            return kzp::smooth_with_cis(
                raw, to_adaptive(method, smooth_level, alpha, log_scale, min_window3,
                                 df_convention));
        },
        py::arg("raw"), py::arg("method") = "dz", py::arg("smooth_level") = 0.05,
        py::arg("alpha") = 0.05, py::arg("log_scale") = true, py::arg("min_window3") = true,
        py::arg("df_convention") = "realized",
        "Dynamically smoothed (log-)periodogram with per-frequency confidence bounds.");

    m.def(
        "static_smooth",
        [](const std::vector<double>& values, const std::string& window, int truncation,
           int grid_m, double alpha) {
            return kzp::static_smoothed_log_periodogram(
                kzp::validate_series(values),
                kzp::StaticWindowSpec{kzp::window_kind_from_name(window), truncation},
                kzp::kzft_grid(grid_m), alpha);
        },
        py::arg("values"), py::arg("window"), py::arg("truncation"), py::arg("grid_m"),
        py::arg("alpha") = 0.05,
        "Lag-window smoothed log periodogram on the grid {j/grid_m}.");

    m.def(
        "summary",
        [](const kzp::SmoothedPeriodogram& sp, int digits, int top) {
            std::vector<std::tuple<double, double, double, double, double>> out;
            for (const auto& p : kzp::summary_top(sp, digits, top)) {
                out.emplace_back(p.frequency, p.period, p.value, p.ci_lower, p.ci_upper);
            }
            return out;
        },
        py::arg("sp"), py::arg("digits") = 6, py::arg("top") = 5,
        "Top peaks as (frequency, period, ordinate, ci_lower, ci_upper) tuples.");

    m.def("chisq_cdf", &kzp::chisq_cdf, py::arg("x"), py::arg("nu"));
    m.def("chisq_quantile", &kzp::chisq_quantile, py::arg("p"), py::arg("nu"));
    m.def("ci_width", &kzp::ci_width, py::arg("nu"), py::arg("alpha"));
    m.def(
        "ci_bounds",
        [](double log_ordinate, double alpha, double nu) {
            const kzp::Interval iv = kzp::ci_bounds(log_ordinate, kzp::ConfidenceSpec{alpha, nu});
            return std::make_pair(iv.lower, iv.upper);
        },
        py::arg("log_ordinate"), py::arg("alpha"), py::arg("nu"));
    m.def("p_value_greater", &kzp::p_value_greater, py::arg("f1"), py::arg("f2"), py::arg("nu"));
    m.def("p_value_less", &kzp::p_value_less, py::arg("f1"), py::arg("f2"), py::arg("nu"));

    m.def(
        "lag_weight",
        [](const std::string& window, double x) {
            return kzp::lag_weight(kzp::window_kind_from_name(window), x);
        },
        py::arg("window"), py::arg("x"));
    m.def(
        "equivalent_df",
        [](const std::string& window, int n, int truncation) {
            return kzp::equivalent_df(kzp::window_kind_from_name(window), n, truncation);
        },
        py::arg("window"), py::arg("n"), py::arg("truncation"));
    m.def(
        "equivalent_df_numeric",
        [](const std::string& window, int n, int truncation) {
            return kzp::equivalent_df_numeric(kzp::window_kind_from_name(window), n, truncation);
        },
        py::arg("window"), py::arg("n"), py::arg("truncation"));
    m.def(
        "bandwidth",
        [](const std::string& window, int truncation) {
            return kzp::bandwidth(kzp::window_kind_from_name(window), truncation).value;
        },
        py::arg("window"), py::arg("truncation"), "Window bandwidth in radians per sample.");

    m.def("to_radian", [](double f) { return kzp::to_radian(f).value; }, py::arg("cycles"));
    m.def(
        "truncation_bounds",
        [](const std::string& window, int n, double delta_lambda) {
            return kzp::truncation_bounds(kzp::window_kind_from_name(window), n, delta_lambda);
        },
        py::arg("window"), py::arg("n"), py::arg("delta_lambda"));
    m.def("resolvable_by_static", &kzp::resolvable_by_static, py::arg("n"), py::arg("lambda_a"),
          py::arg("lambda_b"));
    m.def(
        "ci_comparison_curves",
        [](int n, double pos, double alpha) {
            std::vector<std::tuple<std::string, int, double, double>> out;
            for (const auto& p : kzp::ci_comparison_curves(n, pos, alpha)) {
                out.emplace_back(p.series, p.x, p.nu, p.width);
            }
            return out;
        },
        py::arg("n"), py::arg("pos"), py::arg("alpha") = 0.05,
        "Rows of (series, x, nu, ci_width) for the width-comparison figures.");

    m.def("estimate_amplitude", &kzp::estimate_amplitude, py::arg("ordinate"));
    m.def(
        "run_two_step",
        [](const std::vector<double>& values, int m, int k, const std::string& method,
           double smooth_level, double alpha, const std::string& window, int top) {
            return kzp::run_two_step(kzp::validate_series(values),
                                     to_adaptive(method, smooth_level, alpha, true, true,
                                                 "realized"),
                                     kzp::KzParams{m, k}, kzp::window_kind_from_name(window),
                                     alpha, top);
        },
        py::arg("values"), py::arg("m"), py::arg("k") = 1, py::arg("method") = "dz",
        py::arg("smooth_level") = 0.05, py::arg("alpha") = 0.05, py::arg("window") = "bartlett",
        py::arg("top") = 5,
        "Two-step analysis: dynamic detection, then a static strength pass when resolvable.");

    m.def("render_plot_svg", &kzp::render_plot_svg, py::arg("sp"),
          "Mean-centred periodogram plot with confidence curves, as an SVG string.");
    m.def("render_plot", &kzp::render_plot, py::arg("sp"), py::arg("path"));
}

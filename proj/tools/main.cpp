// kzp: spectral analysis with Kolmogorov-Zurbenko periodograms.
//
// Subcommands are thin adapters over the library: each reads CSV, calls one
// operation and writes a CSV table (plus an optional SVG plot).

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kzp/adaptive.hpp"
#include "kzp/bounds.hpp"
#include "kzp/chisq.hpp"
#include "kzp/csv.hpp"
#include "kzp/kzft.hpp"
#include "kzp/lag_window.hpp"
#include "kzp/protocol.hpp"
#include "kzp/simulate.hpp"
#include "kzp/svg_plot.hpp"

namespace {

struct OutFile {
    std::unique_ptr<std::ofstream> file;
    std::ostream* stream = &std::cout;
};

OutFile open_out(const std::string& path) {
    OutFile out;
    if (!path.empty()) {
        out.file = std::make_unique<std::ofstream>(path);
        if (!*out.file) throw std::runtime_error("cannot write output file: " + path);
        out.stream = out.file.get();
    }
    return out;
}

kzp::WindowKind parse_window(const std::string& name) { return kzp::window_kind_from_name(name); }

kzp::AdaptiveMethod parse_method(const std::string& name) {
    if (name == "dz") return kzp::AdaptiveMethod::dz;
    if (name == "nz") return kzp::AdaptiveMethod::nz;
    throw CLI::ValidationError("--method", "expected dz or nz");
}

// "frequency:amplitude[:phase]"
kzp::SignalSpec parse_signal(const std::string& text) {
    kzp::SignalSpec spec{0.0, 0.0, 0.0};
    const auto first = text.find(':');
    if (first == std::string::npos) {
        throw CLI::ValidationError("--signal", "expected frequency:amplitude[:phase]");
    }
    const auto second = text.find(':', first + 1);
    try {
        spec.frequency = std::stod(text.substr(0, first));
        spec.amplitude = std::stod(text.substr(first + 1, second == std::string::npos
                                                              ? std::string::npos
                                                              : second - first - 1));
        if (second != std::string::npos) spec.phase = std::stod(text.substr(second + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--signal", "expected frequency:amplitude[:phase]");
    }
    return spec;
}

void warn_floored(const kzp::SmoothedPeriodogram& sp) {
    std::size_t count = 0;
    for (const char f : sp.floored) count += static_cast<std::size_t>(f);
    if (count > 0) {
        std::cerr << "warning: " << count
                  << " spectral estimate(s) were nonpositive and floored before the log transform\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kolmogorov-Zurbenko periodograms with dynamic and static smoothing"};
    app.require_subcommand(1);

    // ---- simulate ----------------------------------------------------------
    auto* sim = app.add_subcommand("simulate", "Generate a seeded sinusoid-plus-noise series");
    int sim_n = 5000;
    std::uint64_t sim_seed = 0;
    std::vector<std::string> sim_signals;
    double sim_noise = 1.0;
    std::string sim_dist = "uniform";
    std::string sim_out;
    sim->add_option("--n", sim_n, "Series length")->required();
    sim->add_option("--seed", sim_seed, "Noise generator seed");
    sim->add_option("--signal", sim_signals,
                    "Sinusoid as frequency:amplitude[:phase]; repeatable");
    sim->add_option("--noise-amp", sim_noise, "Noise amplitude")->required();
    sim->add_option("--noise-dist", sim_dist, "Noise distribution: uniform|normal");
    sim->add_option("--out", sim_out, "Output file (default stdout)");

    // ---- periodogram -------------------------------------------------------
    auto* per = app.add_subcommand(
        "periodogram",
        "Raw KZ periodogram of a series (trailing samples beyond the last full "
        "window of length k(m-1)+1 are dropped)");
    std::string per_in, per_out;
    int per_m = 0, per_k = 1;
    bool per_nohdr = false;
    per->add_option("input", per_in, "Series CSV (value, or index,value)")->required();
    per->add_option("--m", per_m, "KZFT window width")->required();
    per->add_option("--k", per_k, "KZFT iterations");
    per->add_flag("--no-header", per_nohdr, "Input has no header row");
    per->add_option("--out", per_out, "Output file (default stdout)");

    // ---- smooth ------------------------------------------------------------
    auto* smo = app.add_subcommand("smooth", "Dynamically smoothed periodogram with CIs");
    std::string smo_in, smo_out, smo_plot, smo_method = "dz", smo_dfconv = "realized";
    int smo_m = 0, smo_k = 1;
    double smo_level = 0.05, smo_alpha = 0.05;
    bool smo_nohdr = false, smo_raw = false, smo_nofloor = false;
    smo->add_option("input", smo_in, "Series CSV")->required();
    smo->add_option("--m", smo_m, "KZFT window width")->required();
    smo->add_option("--k", smo_k, "KZFT iterations");
    smo->add_option("--method", smo_method, "Smoothing method: dz|nz");
    smo->add_option("--smooth-level", smo_level, "Proportion of smoothness in (0,1)");
    smo->add_option("--alpha", smo_alpha, "Confidence level alpha");
    smo->add_flag("--raw-scale", smo_raw, "Smooth raw ordinates instead of log ordinates");
    smo->add_flag("--no-width-floor", smo_nofloor,
                  "Do not floor realized window lengths at 3 (reference behaviour)");
    smo->add_option("--df-convention", smo_dfconv, "Degrees of freedom: realized|nominal");
    smo->add_flag("--no-header", smo_nohdr, "Input has no header row");
    smo->add_option("--out", smo_out, "Output file (default stdout)");
    smo->add_option("--plot", smo_plot, "Write an SVG plot to this path");

    // ---- static ------------------------------------------------------------
    auto* sta = app.add_subcommand("static", "Lag-window smoothed log periodogram with CIs");
    std::string sta_in, sta_out, sta_plot, sta_window = "bartlett";
    int sta_m = 0, sta_trunc = 0;
    double sta_alpha = 0.05;
    bool sta_nohdr = false;
    sta->add_option("input", sta_in, "Series CSV")->required();
    sta->add_option("--window", sta_window,
                    "Window kind: rectangular|hamming|hanning|bartlett|parzen");
    sta->add_option("--truncation-m", sta_trunc, "Lag truncation point M")->required();
    sta->add_option("--m", sta_m, "Frequency grid resolution (grid {j/m})")->required();
    sta->add_option("--alpha", sta_alpha, "Confidence level alpha");
    sta->add_flag("--no-header", sta_nohdr, "Input has no header row");
    sta->add_option("--out", sta_out, "Output file (default stdout)");
    sta->add_option("--plot", sta_plot, "Write an SVG plot to this path");

    // ---- summary -----------------------------------------------------------
    auto* sum = app.add_subcommand("summary", "Top peaks of a smoothed-periodogram table");
    std::string sum_in, sum_out;
    int sum_digits = 6, sum_top = 5;
    sum->add_option("input", sum_in, "Smoothed-periodogram CSV (output of smooth/static)")
        ->required();
    sum->add_option("--digits", sum_digits, "Significant digits in the report");
    sum->add_option("--top", sum_top, "Number of peaks to report");
    sum->add_option("--out", sum_out, "Output file (default stdout)");

    // ---- bounds ------------------------------------------------------------
    auto* bnd = app.add_subcommand("bounds", "Truncation-point bounds for a static window");
    std::string bnd_window, bnd_out;
    int bnd_n = 0;
    double bnd_gap = 3.141592653589793;
    bnd->add_option("--window", bnd_window,
                    "Window kind: rectangular|hamming|hanning|bartlett|parzen (default: all)");
    bnd->add_option("--n", bnd_n, "Series length")->required();
    bnd->add_option("--gap-rad", bnd_gap, "Smallest radian gap between detected peaks");
    bnd->add_option("--out", bnd_out, "Output file (default stdout)");

    // ---- compare-ci --------------------------------------------------------
    auto* cmp = app.add_subcommand("compare-ci", "CI-width comparison dataset");
    std::string cmp_out;
    int cmp_n = 0;
    double cmp_pos = 0.05, cmp_alpha = 0.05;
    cmp->add_option("--n", cmp_n, "Series length")->required();
    cmp->add_option("--pos", cmp_pos, "Proportion of smoothness")->required();
    cmp->add_option("--alpha", cmp_alpha, "Confidence level alpha");
    cmp->add_option("--out", cmp_out, "Output file (default stdout)");

    // ---- pvalue ------------------------------------------------------------
    auto* pvl = app.add_subcommand("pvalue", "Comparison p-values for two smoothed ordinates");
    double pv_f1 = 0.0, pv_f2 = 0.0, pv_nu = 0.0;
    std::string pv_out;
    pvl->add_option("--f1", pv_f1, "First raw-scale ordinate")->required();
    pvl->add_option("--f2", pv_f2, "Second raw-scale ordinate")->required();
    pvl->add_option("--nu", pv_nu, "Degrees of freedom")->required();
    pvl->add_option("--out", pv_out, "Output file (default stdout)");

    // ---- protocol ----------------------------------------------------------
    auto* pro = app.add_subcommand("protocol", "Two-step detect-then-estimate analysis");
    std::string pro_in, pro_out, pro_plot, pro_method = "dz", pro_window = "bartlett";
    int pro_m = 0, pro_k = 1, pro_top = 5;
    double pro_level = 0.05, pro_alpha = 0.05;
    bool pro_nohdr = false;
    pro->add_option("input", pro_in, "Series CSV")->required();
    pro->add_option("--m", pro_m, "KZFT window width")->required();
    pro->add_option("--k", pro_k, "KZFT iterations");
    pro->add_option("--method", pro_method, "Detection smoothing method: dz|nz");
    pro->add_option("--smooth-level", pro_level, "Proportion of smoothness");
    pro->add_option("--alpha", pro_alpha, "Confidence level alpha");
    pro->add_option("--window", pro_window, "Preferred static window kind");
    pro->add_option("--top", pro_top, "Maximum number of peaks to carry forward");
    pro->add_flag("--no-header", pro_nohdr, "Input has no header row");
    pro->add_option("--out", pro_out, "Output file (default stdout)");
    pro->add_option("--plot", pro_plot, "Write an SVG plot of the dynamic pass to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            std::vector<kzp::SignalSpec> signals;
            for (const auto& text : sim_signals) signals.push_back(parse_signal(text));
            kzp::NoiseSpec noise{sim_noise, sim_seed,
                                 sim_dist == "normal" ? kzp::NoiseDistribution::normal
                                                      : kzp::NoiseDistribution::uniform};
            if (sim_dist != "uniform" && sim_dist != "normal") {
                throw std::invalid_argument("--noise-dist must be uniform or normal");
            }
            const kzp::TimeSeries y = kzp::generate_series(sim_n, signals, noise);
            auto out = open_out(sim_out);
            kzp::write_series_csv(*out.stream, y);
        } else if (*per) {
            const kzp::TimeSeries y = kzp::read_series_csv_file(per_in, per_nohdr);
            const kzp::RawPeriodogram raw = kzp::raw_periodogram(y, per_m, per_k);
            auto out = open_out(per_out);
            kzp::write_raw_periodogram_csv(*out.stream, raw);
        } else if (*smo) {
            const kzp::TimeSeries y = kzp::read_series_csv_file(smo_in, smo_nohdr);
            const kzp::RawPeriodogram raw = kzp::raw_periodogram(y, smo_m, smo_k);
            kzp::AdaptiveSpec spec;
            spec.method = parse_method(smo_method);
            spec.smooth_level = smo_level;
            spec.alpha = smo_alpha;
            spec.log_scale = !smo_raw;
            spec.min_window3 = !smo_nofloor;
            if (smo_dfconv == "nominal") {
                spec.df_convention = kzp::DfConvention::nominal_width;
            } else if (smo_dfconv != "realized") {
                throw std::invalid_argument("--df-convention must be realized or nominal");
            }
            const kzp::SmoothedPeriodogram sp = kzp::smooth_with_cis(raw, spec);
            warn_floored(sp);
            auto out = open_out(smo_out);
            kzp::write_smoothed_csv(*out.stream, sp);
            if (!smo_plot.empty()) kzp::render_plot(sp, smo_plot);
        } else if (*sta) {
            const kzp::TimeSeries y = kzp::read_series_csv_file(sta_in, sta_nohdr);
            const kzp::StaticWindowSpec spec{parse_window(sta_window), sta_trunc};
            const kzp::SmoothedPeriodogram sp =
                kzp::static_smoothed_log_periodogram(y, spec, kzp::kzft_grid(sta_m), sta_alpha);
            warn_floored(sp);
            auto out = open_out(sta_out);
            kzp::write_smoothed_csv(*out.stream, sp);
            if (!sta_plot.empty()) kzp::render_plot(sp, sta_plot);
        } else if (*sum) {
            const kzp::SmoothedPeriodogram sp = kzp::read_smoothed_csv_file(sum_in);
            const auto peaks = kzp::summary_top(sp, sum_digits, sum_top);
            auto out = open_out(sum_out);
            kzp::write_summary_csv(*out.stream, peaks);
        } else if (*bnd) {
            std::vector<kzp::BoundsReport> reports;
            if (bnd_window.empty()) {
                for (const auto kind : kzp::kAllWindowKinds) {
                    reports.push_back(kzp::truncation_bounds(kind, bnd_n, bnd_gap));
                }
            } else {
                reports.push_back(kzp::truncation_bounds(parse_window(bnd_window), bnd_n, bnd_gap));
            }
            auto out = open_out(bnd_out);
            kzp::write_bounds_csv(*out.stream, reports);
        } else if (*cmp) {
            const auto points = kzp::ci_comparison_curves(cmp_n, cmp_pos, cmp_alpha);
            auto out = open_out(cmp_out);
            kzp::write_ci_curves_csv(*out.stream, points);
        } else if (*pvl) {
            auto out = open_out(pv_out);
            *out.stream << "p_greater,p_less\n"
                        << kzp::format_full(kzp::p_value_greater(pv_f1, pv_f2, pv_nu)) << ','
                        << kzp::format_full(kzp::p_value_less(pv_f1, pv_f2, pv_nu)) << '\n';
        } else if (*pro) {
            const kzp::TimeSeries y = kzp::read_series_csv_file(pro_in, pro_nohdr);
            kzp::AdaptiveSpec spec;
            spec.method = parse_method(pro_method);
            spec.smooth_level = pro_level;
            spec.alpha = pro_alpha;
            const kzp::ProtocolReport report = kzp::run_two_step(
                y, spec, kzp::KzParams{pro_m, pro_k}, parse_window(pro_window), pro_alpha, pro_top);
            auto out = open_out(pro_out);
            kzp::write_protocol_csv(*out.stream, report);
            if (!pro_plot.empty()) {
                const kzp::RawPeriodogram raw = kzp::raw_periodogram(y, pro_m, pro_k);
                kzp::render_plot(kzp::smooth_with_cis(raw, spec), pro_plot);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

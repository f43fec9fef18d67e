#include "kzp/svg_plot.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kzp {

PlotLayout plot_layout(const SmoothedPeriodogram& sp) {
    validate_smoothed(sp);
    double mean = 0.0;
    for (const double v : sp.ordinates) mean += v;
    mean /= static_cast<double>(sp.ordinates.size());
    const double low = *std::min_element(sp.ci_lower.begin(), sp.ci_lower.end());
    const double high = *std::max_element(sp.ci_upper.begin(), sp.ci_upper.end());
    return PlotLayout{mean, low - mean - 1.0, high - mean + 1.0};
}

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 55.0;

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

void polyline(std::ostringstream& out, const SmoothedPeriodogram& sp,
              const std::vector<double>& ys, double shift, double x0, double x_scale, double y0,
              double y_scale, const char* color) {
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
    for (std::size_t i = 0; i < ys.size(); ++i) {
        const double px = kLeft + (sp.grid.frequencies[i] - x0) * x_scale;
        const double py = kHeight - kBottom - (ys[i] - shift - y0) * y_scale;
        if (i) out << ' ';
        out << fmt2(px) << ',' << fmt2(py);
    }
    out << "\"/>\n";
}

}  // namespace

std::string render_plot_svg(const SmoothedPeriodogram& sp) {
    const PlotLayout layout = plot_layout(sp);
    const double x0 = sp.grid.frequencies.front();
    const double x1 = sp.grid.frequencies.back();
    const double x_scale = (kWidth - kLeft - kRight) / (x1 - x0);
    const double y_scale = (kHeight - kTop - kBottom) / (layout.y_max - layout.y_min);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "  <rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    // Axes.
    out << "  <line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kHeight - kBottom) << "\" x2=\""
        << fmt2(kWidth - kRight) << "\" y2=\"" << fmt2(kHeight - kBottom)
        << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(kTop) << "\" x2=\"" << fmt2(kLeft)
        << "\" y2=\"" << fmt2(kHeight - kBottom) << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double f = x0 + (x1 - x0) * i / 5.0;
        const double px = kLeft + (f - x0) * x_scale;
        out << "  <line x1=\"" << fmt2(px) << "\" y1=\"" << fmt2(kHeight - kBottom) << "\" x2=\""
            << fmt2(px) << "\" y2=\"" << fmt2(kHeight - kBottom + 5.0) << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << fmt2(px) << "\" y=\"" << fmt2(kHeight - kBottom + 20.0)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt_tick(f) << "</text>\n";
    }
    for (int i = 0; i <= 5; ++i) {
        const double v = layout.y_min + (layout.y_max - layout.y_min) * i / 5.0;
        const double py = kHeight - kBottom - (v - layout.y_min) * y_scale;
        out << "  <line x1=\"" << fmt2(kLeft - 5.0) << "\" y1=\"" << fmt2(py) << "\" x2=\""
            << fmt2(kLeft) << "\" y2=\"" << fmt2(py) << "\" stroke=\"black\"/>\n";
        out << "  <text x=\"" << fmt2(kLeft - 9.0) << "\" y=\"" << fmt2(py + 4.0)
            << "\" font-size=\"12\" text-anchor=\"end\">" << fmt_tick(v) << "</text>\n";
    }
    out << "  <text x=\"" << fmt2(kLeft + (kWidth - kLeft - kRight) / 2.0) << "\" y=\""
        << fmt2(kHeight - 12.0) << "\" font-size=\"14\" text-anchor=\"middle\">Frequency</text>\n";

    polyline(out, sp, sp.ordinates, layout.center_shift, x0, x_scale, layout.y_min, y_scale,
             "black");
    polyline(out, sp, sp.ci_upper, layout.center_shift, x0, x_scale, layout.y_min, y_scale,
             "blue");
    polyline(out, sp, sp.ci_lower, layout.center_shift, x0, x_scale, layout.y_min, y_scale, "red");
    out << "</svg>\n";
    return out.str();
}

void render_plot(const SmoothedPeriodogram& sp, const std::string& path) {
    const std::string svg = render_plot_svg(sp);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write plot file: " + path);
    out << svg;
    if (!out.good()) throw std::runtime_error("error while writing plot file: " + path);
}

}  // namespace kzp

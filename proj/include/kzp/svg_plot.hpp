#pragma once

#include <string>

#include "kzp/core.hpp"

namespace kzp {

// Mean-centering and vertical range of the plotted document: every curve is
// shifted down by the mean of the smoothed ordinates and the y range is
// [min(centred lower) - 1, max(centred upper) + 1].
struct PlotLayout {
    double center_shift;
    double y_min;
    double y_max;
};

PlotLayout plot_layout(const SmoothedPeriodogram& sp);

// SVG document with the mean-centred smoothed curve in black, the upper
// confidence curve in blue and the lower one in red, over a cycles-per-sample
// frequency axis labelled "Frequency" (the ordinate axis is unlabelled).
std::string render_plot_svg(const SmoothedPeriodogram& sp);

// Writes render_plot_svg output to a file; throws when the path is not
// writable.
void render_plot(const SmoothedPeriodogram& sp, const std::string& path);

}  // namespace kzp

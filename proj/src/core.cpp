#include "kzp/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kzp {

TimeSeries validate_series(std::vector<double> values, double sample_interval) {
    if (values.size() < 2) {
        throw std::invalid_argument("time series length < 2");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw std::invalid_argument("time series value at index " + std::to_string(i) +
                                        " is not finite");
        }
    }
    if (!(sample_interval > 0.0) || !std::isfinite(sample_interval)) {
        throw std::invalid_argument("sample interval must be positive and finite");
    }
    return TimeSeries{std::move(values), sample_interval};
}

void validate_grid(const FrequencyGrid& grid) {
    if (grid.frequencies.empty()) {
        throw std::invalid_argument("frequency grid is empty");
    }
    if (grid.frequencies.front() != 0.0) {
        throw std::invalid_argument("frequency grid must start at 0");
    }
    if (!(grid.spacing > 0.0)) {
        throw std::invalid_argument("frequency grid spacing must be positive");
    }
    for (std::size_t i = 1; i < grid.frequencies.size(); ++i) {
        const double step = grid.frequencies[i] - grid.frequencies[i - 1];
        if (!(step > 0.0)) {
            throw std::invalid_argument("frequency grid must be strictly ascending");
        }
        if (std::fabs(step - grid.spacing) > 1e-12) {
            throw std::invalid_argument("frequency grid spacing is not uniform");
        }
    }
    if (grid.frequencies.back() > 0.5 + 1e-12) {
        throw std::invalid_argument("frequency grid exceeds the Nyquist frequency 0.5");
    }
}

RadianFrequency to_radian(double cycles_per_sample) {
    if (!(cycles_per_sample >= 0.0) || cycles_per_sample > 0.5) {
        throw std::invalid_argument("frequency must lie in [0, 0.5] cycles per sample");
    }
    return RadianFrequency{2.0 * std::numbers::pi * cycles_per_sample};
}

void validate_raw_periodogram(const RawPeriodogram& raw) {
    validate_grid(raw.grid);
    if (raw.ordinates.size() != raw.grid.size()) {
        throw std::invalid_argument("periodogram ordinate count does not match the grid");
    }
    for (std::size_t i = 0; i < raw.ordinates.size(); ++i) {
        if (!std::isfinite(raw.ordinates[i]) || raw.ordinates[i] < 0.0) {
            throw std::invalid_argument("periodogram ordinate at index " + std::to_string(i) +
                                        " is negative or not finite");
        }
    }
}

const char* window_name(WindowKind kind) {
    switch (kind) {
        case WindowKind::rectangular: return "rectangular";
        case WindowKind::tukey_hamming: return "tukey-hamming";
        case WindowKind::tukey_hanning: return "tukey-hanning";
        case WindowKind::bartlett: return "bartlett";
        case WindowKind::parzen: return "parzen";
    }
    return "unknown";
}

WindowKind window_kind_from_name(const std::string& name) {
    if (name == "rectangular") return WindowKind::rectangular;
    if (name == "tukey-hamming" || name == "hamming") return WindowKind::tukey_hamming;
    if (name == "tukey-hanning" || name == "hanning") return WindowKind::tukey_hanning;
    if (name == "bartlett") return WindowKind::bartlett;
    if (name == "parzen") return WindowKind::parzen;
    throw std::invalid_argument("unknown window kind '" + name +
                                "'; expected rectangular|hamming|hanning|bartlett|parzen");
}

std::string SmoothMethod::to_string() const {
    switch (family) {
        case SmoothFamily::dz: return "DZ";
        case SmoothFamily::nz: return "NZ";
        case SmoothFamily::static_window:
            return std::string("STATIC(") + window_name(kind) + "," + std::to_string(truncation) +
                   ")";
    }
    return "unknown";
}

void validate_smoothed(const SmoothedPeriodogram& sp) {
    validate_grid(sp.grid);
    const std::size_t n = sp.ordinates.size();
    if (sp.grid.size() != n || sp.half_widths.size() != n || sp.realized_lengths.size() != n ||
        sp.ci_lower.size() != n || sp.ci_upper.size() != n || sp.floored.size() != n) {
        throw std::invalid_argument("smoothed periodogram field lengths differ");
    }
    if (!(sp.alpha > 0.0 && sp.alpha < 1.0)) {
        throw std::invalid_argument("alpha must lie in (0, 1)");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sp.half_widths[i] < 1) {
            throw std::invalid_argument("half width below 1 at index " + std::to_string(i));
        }
        if (sp.realized_lengths[i] > 2 * sp.half_widths[i] - 1) {
            throw std::invalid_argument("realized window length exceeds 2m-1 at index " +
                                        std::to_string(i));
        }
        if (!(sp.ci_lower[i] <= sp.ordinates[i] && sp.ordinates[i] <= sp.ci_upper[i])) {
            throw std::invalid_argument("confidence bounds do not bracket the ordinate at index " +
                                        std::to_string(i));
        }
    }
}

}  // namespace kzp

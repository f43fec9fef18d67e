#include "kzp/kzft.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace kzp {

KzftWeights kzft_weights(int m, int k) {
    if (m < 2) throw std::invalid_argument("kzft_weights: window width m must be at least 2");
    if (k < 1) throw std::invalid_argument("kzft_weights: iteration count k must be at least 1");

    // Convolve in integer counts (exact in double for the supported range),
    // then normalize by m^k once.
    std::vector<double> counts(static_cast<std::size_t>(m), 1.0);
    for (int it = 1; it < k; ++it) {
        std::vector<double> next(counts.size() + static_cast<std::size_t>(m) - 1, 0.0);
        for (std::size_t i = 0; i < counts.size(); ++i) {
            for (int j = 0; j < m; ++j) {
                next[i + static_cast<std::size_t>(j)] += counts[i];
            }
        }
        counts.swap(next);
    }
    // counts are exact integers in double (sum = m^k <= 64^5 < 2^53).
    double total = 0.0;
    for (const double c : counts) total += c;
    for (auto& c : counts) c /= total;
    return KzftWeights{std::move(counts), m, k};
}

FrequencyGrid kzft_grid(int m) {
    if (m < 2) throw std::invalid_argument("kzft_grid: window width m must be at least 2");
    const std::size_t grid_len = static_cast<std::size_t>(m / 2) + 1;
    std::vector<double> freqs(grid_len);
    for (std::size_t j = 0; j < grid_len; ++j) freqs[j] = static_cast<double>(j) / m;
    return FrequencyGrid{std::move(freqs), 1.0 / m};
}

RawPeriodogram raw_periodogram(const TimeSeries& y, int m, int k) {
    const KzftWeights w = kzft_weights(m, k);
    const std::size_t length = w.size();
    const std::size_t n = y.values.size();
    if (n < length) {
        throw std::invalid_argument("raw_periodogram: series shorter than the KZFT window k(m-1)+1");
    }
    const std::size_t windows = n / length;

    // Phase table: frequencies are j/m, so the phase of sample u at frequency
    // index j is 2*pi*((j*u) mod m)/m; the integer reduction keeps phases
    // exact for arbitrarily long series.
    std::vector<double> cos_table(static_cast<std::size_t>(m));
    std::vector<double> sin_table(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / m;
        cos_table[static_cast<std::size_t>(r)] = std::cos(theta);
        sin_table[static_cast<std::size_t>(r)] = std::sin(theta);
    }

    FrequencyGrid grid = kzft_grid(m);
    const std::size_t grid_len = grid.size();
    std::vector<double> ordinates(grid_len, 0.0);
    for (std::size_t j = 0; j < grid_len; ++j) {
        double acc = 0.0;
        for (std::size_t b = 0; b < windows; ++b) {
            double re = 0.0;
            double im = 0.0;
            const std::size_t start = b * length;
            for (std::size_t s = 0; s < length; ++s) {
                const std::uint64_t u = start + s;
                const std::size_t r =
                    static_cast<std::size_t>((static_cast<std::uint64_t>(j) * u) % m);
                const double v = w.weights[s] * y.values[u];
                re += v * cos_table[r];
                im -= v * sin_table[r];
            }
            acc += re * re + im * im;
        }
        ordinates[j] = acc / static_cast<double>(windows);
    }

    RawPeriodogram raw{std::move(grid), std::move(ordinates), m, k};
    validate_raw_periodogram(raw);
    return raw;
}

}  // namespace kzp

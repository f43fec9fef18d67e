#include "kzp/simulate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "kzp/rng.hpp"

namespace kzp {

namespace {

void check_specs(std::span<const SignalSpec> signals, const NoiseSpec& noise) {
    for (const auto& s : signals) {
        if (!(s.frequency > 0.0 && s.frequency < 0.5)) {
            throw std::invalid_argument("signal frequency must lie in (0, 0.5)");
        }
        if (!(s.amplitude > 0.0)) {
            throw std::invalid_argument("signal amplitude must be positive");
        }
    }
    if (!(noise.amplitude > 0.0)) {
        throw std::invalid_argument("noise amplitude must be positive");
    }
}

}  // namespace

TimeSeries generate_series(int n, std::span<const SignalSpec> signals, const NoiseSpec& noise) {
    if (n < 2) throw std::invalid_argument("generate_series: n must be at least 2");
    check_specs(signals, noise);

    Xoshiro256pp rng(noise.seed);
    std::vector<double> values(static_cast<std::size_t>(n), 0.0);
    for (int t = 1; t <= n; ++t) {
        double v = 0.0;
        for (const auto& s : signals) {
            v += s.amplitude *
                 std::sin(2.0 * std::numbers::pi * s.frequency * static_cast<double>(t) + s.phase);
        }
        v += noise.distribution == NoiseDistribution::uniform
                 ? noise.amplitude * rng.uniform_symmetric()
                 : noise.amplitude * rng.normal();
        values[static_cast<std::size_t>(t - 1)] = v;
    }
    return TimeSeries{std::move(values), 1.0};
}

double snr(std::span<const SignalSpec> signals, const NoiseSpec& noise) {
    check_specs(signals, noise);
    double power = 0.0;
    for (const auto& s : signals) power += s.amplitude * s.amplitude;
    return power / (noise.amplitude * noise.amplitude);
}

}  // namespace kzp

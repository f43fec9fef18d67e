#pragma once

#include <cstdint>
#include <span>

#include "kzp/core.hpp"

namespace kzp {

// One sinusoidal component: a * sin(2*pi*f*t + phase), t = 1..n.
struct SignalSpec {
    double frequency;    // cycles per sample, in (0, 0.5)
    double amplitude;    // > 0
    double phase = 0.0;  // radians
};

enum class NoiseDistribution { uniform, normal };

// Additive noise of the stated amplitude: uniform on [-amplitude, amplitude]
// by default, or zero-mean normal with standard deviation `amplitude` as a
// sensitivity alternative. Draws come from the in-repo xoshiro generator so
// identical seeds reproduce identical series everywhere.
struct NoiseSpec {
    double amplitude;  // > 0
    std::uint64_t seed = 0;
    NoiseDistribution distribution = NoiseDistribution::uniform;
};

TimeSeries generate_series(int n, std::span<const SignalSpec> signals, const NoiseSpec& noise);

// Signal-to-noise ratio: sum of squared signal amplitudes over the squared
// noise amplitude.
double snr(std::span<const SignalSpec> signals, const NoiseSpec& noise);

}  // namespace kzp

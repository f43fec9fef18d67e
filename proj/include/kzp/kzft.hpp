#pragma once

#include <vector>

#include "kzp/core.hpp"

namespace kzp {

// Weight sequence of the KZ Fourier transform: the k-fold self-convolution of
// a uniform moving average of width m. Length k*(m-1)+1, symmetric, sums to 1.
struct KzftWeights {
    std::vector<double> weights;
    int window_width = 0;  // m
    int iterations = 0;    // k

    std::size_t size() const { return weights.size(); }
};

KzftWeights kzft_weights(int m, int k);

// The KZ frequency grid {j/m : j = 0..m/2}, spacing 1/m.
FrequencyGrid kzft_grid(int m);

// Raw KZ periodogram of a series: ordinates on the grid {j/m : j=0..m/2},
// each the mean over non-overlapping length-L windows (L = k*(m-1)+1) of the
// squared modulus of the KZFT coefficient at that frequency. Trailing samples
// that do not fill a final window are dropped. A noiseless sinusoid of
// amplitude a at an interior grid frequency yields an ordinate of exactly
// a^2/4 there, which fixes the normalization used by amplitude estimates.
RawPeriodogram raw_periodogram(const TimeSeries& y, int m, int k);

}  // namespace kzp

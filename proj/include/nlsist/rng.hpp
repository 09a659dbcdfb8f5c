#pragma once

#include <cstdint>
#include <random>

#include "nlsist/fft.hpp"
#include "nlsist/fn.hpp"

namespace nlsist {

// Band-limited random function: iid complex Gaussian coefficients on the
// central eighth of the spectrum, transformed back to the grid. Deterministic
// for a given seed.
inline SampledFn random_band_limited(const UniformGrid& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    SampledFn spec(g.dual());
    const std::int64_t m = g.n / 2, band = std::max<std::int64_t>(2, g.n / 16);
    for (std::int64_t j = m - band; j <= m + band; ++j)
        spec.values[std::size_t(j)] = cplx{nd(rng), nd(rng)};
    return fourier_inverse(spec);
}

}  // namespace nlsist

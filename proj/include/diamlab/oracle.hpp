#pragma once

#include "diamlab/geometry.hpp"

#include <cstdint>

namespace diamlab {

/// Monte Carlo estimate by uniform rejection sampling in the figure's
/// bounding box. Samples are drawn in fixed-size chunks, chunk i from
/// Rng(seed, i), and reduced as integer counts, so the result depends only on
/// (figure, samples, seed) and not on the number of worker threads.
struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;  ///< samples inside the figure
    std::uint64_t seed = 0;
    BoundingBox box;
};

inline constexpr std::uint64_t kMinOracleSamples = 10'000;
inline constexpr std::uint64_t kOracleChunk = 1u << 16;

/// Area estimate: hit fraction times box area.
McEstimate mc_area(const Figure& f, std::uint64_t samples, std::uint64_t seed, const Tolerance& tol = {});

/// Fraction of the samples inside f that fall outside disc(c).
McEstimate mc_mu(const Figure& f, const Circle& c, std::uint64_t samples, std::uint64_t seed,
                 const Tolerance& tol = {});

}  // namespace diamlab

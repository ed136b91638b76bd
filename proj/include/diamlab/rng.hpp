#pragma once

#include <cstdint>
#include <random>

namespace diamlab {

/// Reproducible random stream: std::mt19937_64 (bit-exact on every
/// conforming platform) seeded through SplitMix64 from (seed, stream).
/// Conversions to reals are done here rather than with std distributions,
/// whose output is implementation-defined.
class Rng {
public:
    static constexpr const char* kName = "mt19937_64+splitmix64";

    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Index in [0, n).
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }
    /// Standard normal via Box-Muller.
    double normal();

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace diamlab

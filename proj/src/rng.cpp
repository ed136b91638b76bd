#include "diamlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace diamlab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(splitmix64(seed) ^ splitmix64(~stream))) {}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    while (u == 0.0) u = uniform();
    const double v = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u));
    spare_ = mag * std::sin(2.0 * std::numbers::pi * v);
    has_spare_ = true;
    return mag * std::cos(2.0 * std::numbers::pi * v);
}

}  // namespace diamlab

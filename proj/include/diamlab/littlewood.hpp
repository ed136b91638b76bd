#pragma once

#include "diamlab/geometry.hpp"

#include <functional>
#include <vector>

namespace diamlab {

/// Boundary distance rho(theta) from an origin O lying on the boundary,
/// sampled on a strictly increasing grid from 0 to pi. Linear in between.
class RadialProfile {
public:
    static constexpr std::size_t kMinSamples = 8;

    RadialProfile(std::vector<double> theta, std::vector<double> rho);

    /// Uniform grid of `n` samples of `rho` over [0, pi].
    static RadialProfile sample(const std::function<double(double)>& rho, std::size_t n);

    const std::vector<double>& theta() const { return theta_; }
    const std::vector<double>& rho() const { return rho_; }
    std::size_t size() const { return theta_.size(); }

    /// Linear interpolation of rho; zero outside [0, pi].
    double rho_at(double angle) const;
    /// Linear interpolation of rho^2 between samples.
    double rho_sq_at(double angle) const;

private:
    std::size_t locate(double angle) const;

    std::vector<double> theta_;
    std::vector<double> rho_;
};

struct RadialArea {
    double direct = 0.0;        ///< 1/2 * integral of rho^2 over [0, pi]
    double paired = 0.0;        ///< 1/2 * integral of rho(t)^2 + rho(t + pi/2)^2 over [0, pi/2]
    double quad_error = 0.0;    ///< half-grid Richardson estimate of the trapezoid error
};

RadialArea radial_area(const RadialProfile& p);

/// Largest squared length of a right-angled chord PQ through O:
/// max of rho(t)^2 + rho(t + pi/2)^2 for t in [0, pi/2].
double max_chord_sq(const RadialProfile& p);

struct LittlewoodBound {
    double area = 0.0;
    double bound = 0.0;          ///< (pi / 4) * max_chord_sq
    double max_chord_sq = 0.0;
    double tolerance = 0.0;
    bool ok = false;
};

/// Checks area <= (pi / 4) * max PQ^2 up to quadrature tolerance.
LittlewoodBound littlewood_bound(const RadialProfile& p, const Tolerance& tol = {});

}  // namespace diamlab

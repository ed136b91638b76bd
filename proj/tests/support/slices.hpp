#pragma once

// Reference values computed independently of the library: areas of regions
// written as {x in [a, b], lo(x) <= y <= hi(x)} integrated numerically in x.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace slices {

inline constexpr double pi = std::numbers::pi;
inline constexpr double s3 = std::numbers::sqrt3;

inline double integrate(const std::function<double(double)>& f, double a, double b) {
    static boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(f, a, b, 1e-13);
}

// Splits [a, b] at the given interior points so kinks sit on panel ends.
inline double integrate(const std::function<double(double)>& f, double a, double b, std::vector<double> cuts) {
    cuts.push_back(a);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = std::max(a, cuts[i]);
        const double hi = std::min(b, cuts[i + 1]);
        if (hi > lo) s += integrate(f, lo, hi);
    }
    return s;
}

inline double root(double v) { return std::sqrt(std::max(0.0, v)); }

// Upper boundary of the region within 1 of both (-1/2, 0) and (1/2, 0).
inline double lens_top(double x) { return std::min(root(1.0 - (x + 0.5) * (x + 0.5)), root(1.0 - (x - 0.5) * (x - 0.5))); }
// Upper half of the circle of radius 1/2 about the origin.
inline double disc_top(double x) { return root(0.25 - x * x); }

inline double mixed_area() { return integrate(lens_top, -0.5, 0.5, {0.0}); }
inline double mixed_inside() {
    return integrate([](double x) { return std::min(lens_top(x), disc_top(x)); }, -0.5, 0.5, {0.0});
}
inline double lens_area() { return 2.0 * mixed_area(); }
inline double reuleaux_area() {
    // lower arc about the apex (0, sqrt3/2)
    return integrate([](double x) { return lens_top(x) - (s3 / 2.0 - root(1.0 - x * x)); }, -0.5, 0.5, {0.0});
}

// Triangle (-1/2, 0), (1/2, 0), M with M = (-1/2 + cos t, sin t), t in (0, pi/3].
struct Triangle {
    double t;
    double mx() const { return -0.5 + std::cos(t); }
    double my() const { return std::sin(t); }
    double top(double x) const {
        if (x <= mx()) return my() * (x + 0.5) / (mx() + 0.5);
        return my() * (0.5 - x) / (0.5 - mx());
    }
    double area() const { return integrate([this](double x) { return top(x); }, -0.5, 0.5, {mx()}); }
    double inside() const {
        // each side meets the circle again at x = +-(1 - k^2) / (2 (1 + k^2)), k its slope
        const double k1 = my() / (mx() + 0.5);
        const double k2 = my() / (0.5 - mx());
        const double c1 = (1 - k1 * k1) / (2 * (1 + k1 * k1));
        const double c2 = -(1 - k2 * k2) / (2 * (1 + k2 * k2));
        return integrate([this](double x) { return std::min(top(x), disc_top(x)); }, -0.5, 0.5, {mx(), c1, c2});
    }
    double mu() const { return (area() - inside()) / area(); }
};

// Area of a convex polygon (any orientation) inside the disc (c, r), slicing
// along x with panel breaks at every vertex and at the disc's extent.
inline double convex_polygon_disc(const std::vector<std::pair<double, double>>& poly, double cx, double cy, double r) {
    const std::size_t n = poly.size();
    double a = poly[0].first, b = poly[0].first;
    std::vector<double> cuts{cx - r, cx + r};
    for (const auto& [x, y] : poly) {
        a = std::min(a, x);
        b = std::max(b, x);
        cuts.push_back(x);
    }
    auto span = [&](double x) {
        double lo = INFINITY, hi = -INFINITY;
        for (std::size_t i = 0; i < n; ++i) {
            const auto [x0, y0] = poly[i];
            const auto [x1, y1] = poly[(i + 1) % n];
            if ((x < std::min(x0, x1)) || (x > std::max(x0, x1))) continue;
            const double y = x1 == x0 ? std::min(y0, y1) : y0 + (y1 - y0) * (x - x0) / (x1 - x0);
            const double y2 = x1 == x0 ? std::max(y0, y1) : y;
            lo = std::min(lo, y);
            hi = std::max(hi, y2);
        }
        return std::pair{lo, hi};
    };
    auto f = [&](double x) {
        const double h = root(r * r - (x - cx) * (x - cx));
        const auto [lo, hi] = span(x);
        if (!(hi > lo)) return 0.0;
        return std::max(0.0, std::min(hi, cy + h) - std::max(lo, cy - h));
    };
    double s = 0.0;
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = std::max(a, cuts[i]);
        const double hi = std::min(b, cuts[i + 1]);
        if (hi > lo) s += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-13);
    }
    return s;
}

}  // namespace slices

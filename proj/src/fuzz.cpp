#include "diamlab/fuzz.hpp"

#include <cmath>
#include <algorithm>

namespace diamlab::fuzz {

namespace {

double polygon_signed(const std::vector<Point>& poly) {
    double s = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * s;
}

}  // namespace

std::vector<Point> convex_polygon(Rng& rng, double max_diameter, std::size_t max_vertices) {
    for (;;) {
        const std::size_t n = 3 + rng.index(std::max<std::size_t>(max_vertices, 3) - 2);
        std::vector<Point> pts;
        while (pts.size() < n) {
            const Point p{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            if (dot(p, p) <= 1.0) pts.push_back(p);
        }
        std::vector<Point> hull = convex_hull(std::move(pts));
        if (hull.size() < 3) continue;
        const double d = point_set_diameter(hull);
        if (!(d > 0.0)) continue;
        const double target = max_diameter * rng.uniform(0.3, 1.0);
        for (Point& p : hull) p = (target / d) * p;
        if (std::abs(polygon_signed(hull)) < 1e-6) continue;
        return hull;
    }
}

RadialProfile radial_profile(const std::vector<Point>& polygon, std::size_t origin, std::size_t samples) {
    const std::size_t m = polygon.size();
    const Point o = polygon[origin];
    const Point first = polygon[(origin + 1) % m] - o;
    const double rot = -std::atan2(first.y, first.x);
    const double c = std::cos(rot);
    const double s = std::sin(rot);
    std::vector<Point> local(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Point q = polygon[(origin + i) % m] - o;
        local[i] = {c * q.x - s * q.y, s * q.x + c * q.y};
    }
    local[0] = {0.0, 0.0};

    auto ray = [&](double theta) {
        const Point u{std::cos(theta), std::sin(theta)};
        double best = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const Point a = local[i];
            const Point b = local[(i + 1) % m];
            const Point e = b - a;
            const double den = cross(u, e);
            if (std::abs(den) < 1e-15) continue;
            const double t = cross(a, e) / den;
            const double w = cross(a, u) / den;
            if (w >= -1e-12 && w <= 1.0 + 1e-12 && t > best) best = t;
        }
        return best;
    };
    return RadialProfile::sample(ray, samples);
}

}  // namespace diamlab::fuzz

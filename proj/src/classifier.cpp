#include "diamlab/detail/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace diamlab::detail {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

}  // namespace

PointClassifier::PointClassifier(const Figure& f, double eps) : eps_(eps), box_(bounding_box(f)) {
    for (const Edge& e : f.edges()) {
        if (!e.is_arc()) {
            segments_.push_back({e.start, e.end});
            continue;
        }
        const double a0 = e.start_angle();
        const double sweep = e.sweep();
        const double dir = e.orientation == Orientation::ccw ? 1.0 : -1.0;
        std::vector<double> cuts;
        for (double b : {0.5 * std::numbers::pi, 1.5 * std::numbers::pi}) {
            const double t = dir > 0.0 ? wrap(b - a0) : wrap(a0 - b);
            if (t > 0.0 && t < sweep) cuts.push_back(t);
        }
        std::sort(cuts.begin(), cuts.end());
        std::vector<double> ts{0.0};
        ts.insert(ts.end(), cuts.begin(), cuts.end());
        ts.push_back(sweep);

        auto point_at = [&](std::size_t i) -> Point {
            if (i == 0) return e.start;
            if (i + 1 == ts.size()) return e.end;
            const double a = a0 + dir * ts[i];
            // exact top/bottom so neighbouring pieces share the point bitwise
            return {e.center.x, e.center.y + (std::sin(a) > 0.0 ? e.radius : -e.radius)};
        };
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            const double mid = a0 + dir * 0.5 * (ts[i] + ts[i + 1]);
            pieces_.push_back({e.center, e.radius, std::cos(mid) >= 0.0, point_at(i), point_at(i + 1)});
        }
    }
}

bool PointClassifier::on_boundary(Point p) const {
    for (const Segment& s : segments_) {
        const Point d = s.b - s.a;
        const double t = std::clamp(dot(p - s.a, d) / dot(d, d), 0.0, 1.0);
        if (dist(p, s.a + t * d) <= eps_) return true;
    }
    for (const ArcPiece& a : pieces_) {
        const double r = dist(p, a.center);
        if (std::abs(r - a.radius) > eps_) continue;
        const double lo = std::min(a.p.y, a.q.y) - eps_;
        const double hi = std::max(a.p.y, a.q.y) + eps_;
        const bool side_ok = a.right ? p.x >= a.center.x - eps_ : p.x <= a.center.x + eps_;
        if (side_ok && p.y >= lo && p.y <= hi) return true;
        if (dist(p, a.p) <= eps_ || dist(p, a.q) <= eps_) return true;
    }
    return false;
}

int PointClassifier::crossings(Point p) const {
    int count = 0;
    for (const Segment& s : segments_) {
        if ((s.a.y > p.y) == (s.b.y > p.y)) continue;
        const double x = s.a.x + (p.y - s.a.y) * (s.b.x - s.a.x) / (s.b.y - s.a.y);
        if (x > p.x) ++count;
    }
    for (const ArcPiece& a : pieces_) {
        if ((a.p.y > p.y) == (a.q.y > p.y)) continue;
        const double dy = p.y - a.center.y;
        const double half = std::sqrt(std::max(0.0, a.radius * a.radius - dy * dy));
        const double x = a.right ? a.center.x + half : a.center.x - half;
        if (x > p.x) ++count;
    }
    return count;
}

Location PointClassifier::classify(Point p) const {
    if (p.x < box_.min.x - eps_ || p.x > box_.max.x + eps_ || p.y < box_.min.y - eps_ || p.y > box_.max.y + eps_) {
        return Location::outside;
    }
    if (on_boundary(p)) return Location::boundary;
    return crossings(p) % 2 == 1 ? Location::inside : Location::outside;
}

}  // namespace diamlab::detail

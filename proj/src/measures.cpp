#include "diamlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace diamlab {

const char* to_string(MuMethod m) {
    switch (m) {
        case MuMethod::analytic: return "analytic";
        case MuMethod::clipped: return "clipped";
        case MuMethod::oracle: return "oracle";
    }
    return "?";
}

const char* to_string(LittlewoodStatus s) {
    switch (s) {
        case LittlewoodStatus::ok: return "ok";
        case LittlewoodStatus::violated: return "violated";
        case LittlewoodStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

double disc_triangle_area(Point a, Point b, const Circle& c) {
    const Point p0 = a - c.center;
    const Point p1 = b - c.center;
    const double r = c.radius;
    const Point d = p1 - p0;
    const double qa = dot(d, d);
    if (qa == 0.0) return 0.0;

    // Split the edge where it crosses the circle.
    double cuts[4] = {0.0, 0.0, 0.0, 1.0};
    int n = 1;
    const double qb = 2.0 * dot(p0, d);
    const double qc = dot(p0, p0) - r * r;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc > 0.0) {
        const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
        double t1 = q / qa;
        double t2 = q != 0.0 ? qc / q : t1;
        if (t1 > t2) std::swap(t1, t2);
        if (t1 > 0.0 && t1 < 1.0) cuts[n++] = t1;
        if (t2 > 0.0 && t2 < 1.0 && t2 != t1) cuts[n++] = t2;
    }
    cuts[n++] = 1.0;

    double total = 0.0;
    for (int i = 0; i + 1 < n; ++i) {
        const Point u = p0 + cuts[i] * d;
        const Point v = p0 + cuts[i + 1] * d;
        const Point mid = p0 + (0.5 * (cuts[i] + cuts[i + 1])) * d;
        // strict: a tangent piece touches the circle only at its midpoint
        if (dot(mid, mid) < r * r) {
            total += 0.5 * cross(u, v);
        } else {
            total += 0.5 * r * r * std::atan2(cross(u, v), dot(u, v));
        }
    }
    return total;
}

double polygon_disc_intersection_area(std::span<const Point> polygon, const Circle& c) {
    double total = 0.0;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) total += disc_triangle_area(polygon[i], polygon[(i + 1) % n], c);
    return total;
}

double polygon_area(std::span<const Point> polygon) {
    double s = 0.0;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) s += cross(polygon[i], polygon[(i + 1) % n]);
    return 0.5 * s;
}

DiscIntersection disc_intersection(const Figure& f, const Circle& c, const Tolerance& tol) {
    DiscIntersection out;
    double sum = 0.0;
    for (const Edge& e : f.edges()) {
        if (!e.is_arc()) {
            sum += disc_triangle_area(e.start, e.end, c);
            continue;
        }
        const double phi = e.sweep();
        const bool on_circle =
            dist(e.center, c.center) <= tol.geom_eps && std::abs(e.radius - c.radius) <= tol.geom_eps;
        if (on_circle) {
            const double sector = 0.5 * c.radius * c.radius * phi;
            sum += e.orientation == Orientation::ccw ? sector : -sector;
            continue;
        }
        const std::size_t n = chord_count(e.radius, phi, tol.arc_max_sagitta);
        Point prev = e.start;
        for (std::size_t k = 1; k <= n; ++k) {
            const Point next = e.at(static_cast<double>(k) / static_cast<double>(n));
            sum += disc_triangle_area(prev, next, c);
            prev = next;
        }
        out.method = MuMethod::clipped;
        out.est_error += e.length() * tol.arc_max_sagitta;
    }
    const double total = area(f);
    if (std::abs(sum) <= tol.geom_eps) sum = 0.0;
    if (std::abs(sum - total) <= tol.geom_eps) sum = total;
    out.area = std::clamp(sum, 0.0, total);
    return out;
}

double disc_intersection_area(const Figure& f, const Circle& c, const Tolerance& tol) {
    return disc_intersection(f, c, tol).area;
}

namespace {

double exterior_from(double total, const DiscIntersection& inter, const Tolerance& tol) {
    const double ext = total - inter.area;
    if (ext >= 0.0) return ext;
    if (ext >= -(inter.est_error + tol.geom_eps)) return 0.0;
    throw std::logic_error("exterior area is negative beyond the error estimate");
}

}  // namespace

double exterior_area(const Figure& f, const Circle& c, const Tolerance& tol) {
    return exterior_from(area(f), disc_intersection(f, c, tol), tol);
}

MuReport mu(const Figure& f, const Circle& c, const Tolerance& tol) {
    const double total = area(f);
    if (!(total > 0.0)) throw DegenerateFigure("mu is undefined for a zero-area figure");
    const DiscIntersection inter = disc_intersection(f, c, tol);
    MuReport r;
    r.total_area = total;
    r.interior_area = inter.area;
    r.exterior_area = exterior_from(total, inter, tol);
    r.mu = r.exterior_area / total;
    r.method = inter.method;
    r.est_error = inter.est_error;
    return r;
}

LittlewoodCheck littlewood_check(const Figure& f, const Tolerance& tol) {
    LittlewoodCheck out;
    out.area = area(f);
    out.diameter = diameter(f, tol);
    out.bound = 0.25 * std::numbers::pi;
    if (out.diameter > 1.0 + tol.geom_eps) {
        out.status = LittlewoodStatus::not_applicable;
    } else {
        out.status = out.area <= out.bound + tol.area_tol ? LittlewoodStatus::ok : LittlewoodStatus::violated;
    }
    return out;
}

}  // namespace diamlab

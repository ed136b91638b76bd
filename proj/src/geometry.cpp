#include "diamlab/geometry.hpp"

#include "diamlab/detail/classifier.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>

namespace diamlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Maps an angle into [0, 2pi).
double wrap(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    if (a >= kTwoPi) a = 0.0;
    return a;
}

double angle_of(Point v) { return std::atan2(v.y, v.x); }

Point unit(Point v) {
    const double n = norm(v);
    return {v.x / n, v.y / n};
}

Point perp(Point v) { return {-v.y, v.x}; }

}  // namespace

// ---------------------------------------------------------------------------
// Tolerance, Circle
// ---------------------------------------------------------------------------

void Tolerance::validate() const {
    for (double v : {geom_eps, area_tol, arc_max_sagitta}) {
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("tolerances must be finite and positive");
    }
}

Circle::Circle(Point c, double r) : center(c), radius(r) {
    if (!finite(c)) throw DomainError("circle center must be finite");
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("circle radius must be finite and positive");
}

const char* to_string(Location loc) {
    switch (loc) {
        case Location::inside: return "inside";
        case Location::boundary: return "boundary";
        case Location::outside: return "outside";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Edge
// ---------------------------------------------------------------------------

Edge Edge::segment(Point a, Point b) {
    if (!finite(a) || !finite(b)) throw InvalidFigure("segment endpoints must be finite");
    if (a == b) throw InvalidFigure("zero-length segment");
    Edge e;
    e.kind = EdgeKind::segment;
    e.start = a;
    e.end = b;
    return e;
}

Edge Edge::arc(Point a, Point b, Point center, double radius, Orientation o) {
    if (!finite(a) || !finite(b) || !finite(center)) throw InvalidFigure("arc points must be finite");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidFigure("arc radius must be positive");
    const double tol = 1e-12 * radius;
    if (std::abs(dist(a, center) - radius) > tol || std::abs(dist(b, center) - radius) > tol) {
        throw InvalidFigure("arc endpoints are not on the circle");
    }
    if (a == b) throw InvalidFigure("arc with start == end must be a full turn");
    Edge e;
    e.kind = EdgeKind::arc;
    e.start = a;
    e.end = b;
    e.center = center;
    e.radius = radius;
    e.orientation = o;
    return e;
}

Edge Edge::circle(Point center, double radius, Orientation o) {
    if (!finite(center)) throw InvalidFigure("circle center must be finite");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidFigure("circle radius must be positive");
    Edge e;
    e.kind = EdgeKind::arc;
    e.start = e.end = center + Point{radius, 0.0};
    e.center = center;
    e.radius = radius;
    e.orientation = o;
    e.full_turn = true;
    return e;
}

double Edge::start_angle() const { return angle_of(start - center); }

double Edge::sweep() const {
    if (!is_arc()) return 0.0;
    if (full_turn) return kTwoPi;
    const double a0 = start_angle();
    const double a1 = angle_of(end - center);
    const double d = orientation == Orientation::ccw ? wrap(a1 - a0) : wrap(a0 - a1);
    return d == 0.0 ? kTwoPi : d;
}

double Edge::length() const { return is_arc() ? radius * sweep() : dist(start, end); }

Point Edge::at(double t) const {
    if (t <= 0.0) return start;
    if (t >= 1.0) return end;
    if (!is_arc()) return start + t * (end - start);
    const double dir = orientation == Orientation::ccw ? 1.0 : -1.0;
    const double a = start_angle() + dir * t * sweep();
    return center + Point{radius * std::cos(a), radius * std::sin(a)};
}

Point Edge::tangent(double t) const {
    if (!is_arc()) return unit(end - start);
    const Point radial = unit(at(t) - center);
    return orientation == Orientation::ccw ? perp(radial) : -1.0 * perp(radial);
}

Edge Edge::reversed() const {
    Edge e = *this;
    std::swap(e.start, e.end);
    if (is_arc()) e.orientation = orientation == Orientation::ccw ? Orientation::cw : Orientation::ccw;
    return e;
}

bool Edge::arc_covers(Point p, double angle_tol) const {
    if (full_turn) return true;
    const double a = angle_of(p - center);
    const double a0 = start_angle();
    const double off = orientation == Orientation::ccw ? wrap(a - a0) : wrap(a0 - a);
    return off <= sweep() + angle_tol || off >= kTwoPi - angle_tol;
}

double Edge::distance_to(Point p) const {
    if (!is_arc()) {
        const Point d = end - start;
        const double t = std::clamp(dot(p - start, d) / dot(d, d), 0.0, 1.0);
        return dist(p, start + t * d);
    }
    const Point q = p - center;
    const double nq = norm(q);
    if (nq == 0.0) return radius;
    if (arc_covers(center + (radius / nq) * q)) return std::abs(nq - radius);
    return std::min(dist(p, start), dist(p, end));
}

// ---------------------------------------------------------------------------
// Figure
// ---------------------------------------------------------------------------

namespace {

bool collinear_continuation(const Edge& a, const Edge& b, double eps) {
    if (a.is_arc() || b.is_arc()) return false;
    const Point d1 = a.end - a.start;
    const Point d2 = b.end - b.start;
    return std::abs(cross(d1, d2)) <= eps * norm(d1) * norm(d2) && dot(d1, d2) > 0.0;
}

void merge_collinear(std::vector<Edge>& edges, double eps) {
    bool changed = true;
    while (changed && edges.size() > 1) {
        changed = false;
        for (std::size_t i = 0; i < edges.size() && edges.size() > 1; ++i) {
            const std::size_t j = (i + 1) % edges.size();
            if (collinear_continuation(edges[i], edges[j], eps)) {
                edges[i] = Edge::segment(edges[i].start, edges[j].end);
                edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
                break;
            }
        }
    }
}

}  // namespace

Figure::Figure(std::vector<Edge> edges, const Tolerance& tol) {
    tol.validate();
    if (edges.empty()) throw InvalidFigure("figure has no edges");
    if (edges.size() == 1 && !(edges[0].is_arc() && edges[0].full_turn)) {
        throw InvalidFigure("a single-edge figure must be a full circle");
    }
    for (const Edge& e : edges) {
        if (!finite(e.start) || !finite(e.end)) throw InvalidFigure("edge endpoints must be finite");
        if (e.full_turn && edges.size() != 1) throw InvalidFigure("full-turn arc must be the only edge");
        if (!e.full_turn && dist(e.start, e.end) <= tol.geom_eps) throw InvalidFigure("zero-length edge");
        if (e.is_arc()) {
            if (!finite(e.center) || !(e.radius > 0.0) || !std::isfinite(e.radius)) {
                throw InvalidFigure("arc needs a finite center and positive radius");
            }
            const double on_circle = 1e-12 * e.radius;
            if (std::abs(dist(e.start, e.center) - e.radius) > on_circle ||
                std::abs(dist(e.end, e.center) - e.radius) > on_circle) {
                throw InvalidFigure("arc endpoints are not on the circle");
            }
        }
    }
    const std::size_t n = edges.size();
    for (std::size_t i = 0; i < n; ++i) {
        Edge& cur = edges[i];
        const Edge& next = edges[(i + 1) % n];
        if (dist(cur.end, next.start) > tol.geom_eps) throw InvalidFigure("boundary is not closed");
        cur.end = next.start;
    }
    merge_collinear(edges, tol.geom_eps);

    const double a = signed_area(edges);
    if (!(std::abs(a) > tol.geom_eps * tol.geom_eps)) throw DegenerateFigure("figure encloses no area");
    if (a < 0.0) {
        std::vector<Edge> rev;
        rev.reserve(edges.size());
        for (auto it = edges.rbegin(); it != edges.rend(); ++it) rev.push_back(it->reversed());
        edges = std::move(rev);
    }
    check_simple(edges, tol);
    edges_ = std::move(edges);
}

Figure Figure::polygon(std::span<const Point> vertices, const Tolerance& tol) {
    if (vertices.size() < 3) throw InvalidFigure("polygon needs at least three vertices");
    std::vector<Edge> edges;
    edges.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        edges.push_back(Edge::segment(vertices[i], vertices[(i + 1) % vertices.size()]));
    }
    return Figure(std::move(edges), tol);
}

bool Figure::has_arcs() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_arc(); });
}

std::vector<Point> Figure::vertices() const {
    std::vector<Point> v;
    v.reserve(edges_.size());
    for (const Edge& e : edges_) v.push_back(e.start);
    return v;
}

// ---------------------------------------------------------------------------
// Simplicity
// ---------------------------------------------------------------------------

namespace {

struct Hits {
    std::vector<Point> points;
    bool overlap = false;
};

BoundingBox edge_box(const Edge& e) {
    BoundingBox b{{std::min(e.start.x, e.end.x), std::min(e.start.y, e.end.y)},
                  {std::max(e.start.x, e.end.x), std::max(e.start.y, e.end.y)}};
    if (e.is_arc()) {
        const Point c = e.center;
        const double r = e.radius;
        for (Point p : {Point{c.x + r, c.y}, Point{c.x - r, c.y}, Point{c.x, c.y + r}, Point{c.x, c.y - r}}) {
            if (e.arc_covers(p)) {
                b.min = {std::min(b.min.x, p.x), std::min(b.min.y, p.y)};
                b.max = {std::max(b.max.x, p.x), std::max(b.max.y, p.y)};
            }
        }
    }
    return b;
}

Hits segment_segment(const Edge& s, const Edge& t, double eps) {
    Hits h;
    const Point d1 = s.end - s.start;
    const Point d2 = t.end - t.start;
    const double l1 = norm(d1);
    const double l2 = norm(d2);
    const double denom = cross(d1, d2);
    const Point w = t.start - s.start;
    if (std::abs(denom) <= 1e-12 * l1 * l2) {
        if (std::abs(cross(w, d1)) > eps * l1) return h;  // parallel, disjoint lines
        const double ta = dot(w, d1) / (l1 * l1);
        const double tb = dot(t.end - s.start, d1) / (l1 * l1);
        const double lo = std::max(0.0, std::min(ta, tb));
        const double hi = std::min(1.0, std::max(ta, tb));
        if ((hi - lo) * l1 > eps) {
            h.overlap = true;
        } else if (hi - lo >= -eps / l1) {
            h.points.push_back(s.start + 0.5 * (lo + hi) * d1);
        }
        return h;
    }
    const double u = cross(w, d2) / denom;
    const double v = cross(w, d1) / denom;
    if (u >= -eps / l1 && u <= 1.0 + eps / l1 && v >= -eps / l2 && v <= 1.0 + eps / l2) {
        h.points.push_back(s.start + u * d1);
    }
    return h;
}

Hits segment_arc(const Edge& s, const Edge& a, double eps) {
    Hits h;
    const Point d = s.end - s.start;
    const double len = norm(d);
    const Point u = {d.x / len, d.y / len};
    const double along = dot(a.center - s.start, u);
    const Point foot = s.start + along * u;
    const double off = dist(a.center, foot);
    const double r = a.radius;
    if (off > r + eps) return h;
    const double disc = r * r - off * off;
    std::vector<double> ts;
    if (disc <= 1e-14 * r * r) {
        ts.push_back(along);
    } else {
        const double half = std::sqrt(disc);
        ts.push_back(along - half);
        ts.push_back(along + half);
    }
    const double angle_tol = eps / r;
    for (double t : ts) {
        if (t < -eps || t > len + eps) continue;
        const Point p = s.start + t * u;
        if (a.arc_covers(p, angle_tol)) h.points.push_back(p);
    }
    return h;
}

// Measure of the overlap of two angular intervals [s1, s1+w1], [s2, s2+w2].
double angular_overlap(double s1, double w1, double s2, double w2) {
    const double o = wrap(s2 - s1);
    double total = std::max(0.0, std::min(w1, o + w2) - o);
    total += std::max(0.0, std::min(w1, o + w2 - kTwoPi));
    return total;
}

// Counter-clockwise angular interval [start, start + sweep] of an arc.
std::pair<double, double> ccw_interval(const Edge& e) {
    const double w = e.sweep();
    const double s = e.orientation == Orientation::ccw ? e.start_angle() : angle_of(e.end - e.center);
    return {wrap(s), w};
}

Hits arc_arc(const Edge& a, const Edge& b, double eps) {
    Hits h;
    const double d = dist(a.center, b.center);
    const double r1 = a.radius;
    const double r2 = b.radius;
    if (d <= eps) {
        if (std::abs(r1 - r2) > eps) return h;
        const auto [s1, w1] = ccw_interval(a);
        const auto [s2, w2] = ccw_interval(b);
        if (angular_overlap(s1, w1, s2, w2) * r1 > eps) {
            h.overlap = true;
            return h;
        }
        for (Point p : {b.start, b.end}) {
            if (a.arc_covers(p, eps / r1)) h.points.push_back(p);
        }
        for (Point p : {a.start, a.end}) {
            if (b.arc_covers(p, eps / r2)) h.points.push_back(p);
        }
        return h;
    }
    if (d > r1 + r2 + eps || d < std::abs(r1 - r2) - eps) return h;
    const Point u = {(b.center.x - a.center.x) / d, (b.center.y - a.center.y) / d};
    const double along = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double disc = r1 * r1 - along * along;
    std::vector<Point> cands;
    const Point base = a.center + along * u;
    if (disc <= 1e-14 * r1 * r1) {
        cands.push_back(base);
    } else {
        const double off = std::sqrt(disc);
        cands.push_back(base + off * perp(u));
        cands.push_back(base - off * perp(u));
    }
    for (Point p : cands) {
        if (a.arc_covers(p, eps / r1) && b.arc_covers(p, eps / r2)) h.points.push_back(p);
    }
    return h;
}

Hits intersect(const Edge& a, const Edge& b, double eps) {
    if (!a.is_arc() && !b.is_arc()) return segment_segment(a, b, eps);
    if (!a.is_arc()) return segment_arc(a, b, eps);
    if (!b.is_arc()) return segment_arc(b, a, eps);
    return arc_arc(a, b, eps);
}

}  // namespace

void check_simple(std::span<const Edge> edges, const Tolerance& tol) {
    const std::size_t n = edges.size();
    if (n < 2) return;
    // Intersections this close to a shared vertex are the shared vertex.
    const double shared_radius = std::max(1e-9, 1e3 * tol.geom_eps);
    const double eps = tol.geom_eps;

    std::vector<BoundingBox> boxes;
    boxes.reserve(n);
    for (const Edge& e : edges) boxes.push_back(edge_box(e));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return boxes[i].min.x < boxes[j].min.x; });

    std::vector<std::size_t> active;
    for (std::size_t idx : order) {
        const BoundingBox& bi = boxes[idx];
        std::erase_if(active, [&](std::size_t k) { return boxes[k].max.x < bi.min.x - eps; });
        for (std::size_t k : active) {
            const BoundingBox& bk = boxes[k];
            if (bk.max.y < bi.min.y - eps || bi.max.y < bk.min.y - eps) continue;
            const std::size_t i = std::min(idx, k);
            const std::size_t j = std::max(idx, k);
            std::vector<Point> shared;
            if (j == i + 1) shared.push_back(edges[i].end);
            if (i == 0 && j == n - 1) shared.push_back(edges[j].end);
            const Hits hits = intersect(edges[i], edges[j], eps);
            if (hits.overlap) throw InvalidFigure("boundary overlaps itself");
            for (Point p : hits.points) {
                const bool at_shared = std::any_of(shared.begin(), shared.end(),
                                                   [&](Point s) { return dist(p, s) <= shared_radius; });
                if (!at_shared) throw InvalidFigure("boundary is self-intersecting");
            }
        }
        active.push_back(idx);
    }
}

// ---------------------------------------------------------------------------
// Measures of a single figure
// ---------------------------------------------------------------------------

double signed_area(std::span<const Edge> edges) {
    double chord = 0.0;
    double bulge = 0.0;
    for (const Edge& e : edges) {
        chord += cross(e.start, e.end);
        if (e.is_arc()) {
            const double phi = e.sweep();
            const double seg = 0.5 * e.radius * e.radius * (phi - std::sin(phi));
            bulge += e.orientation == Orientation::ccw ? seg : -seg;
        }
    }
    return 0.5 * chord + bulge;
}

double area(const Figure& f) { return signed_area(f.edges()); }

double perimeter(const Figure& f) {
    double p = 0.0;
    for (const Edge& e : f.edges()) p += e.length();
    return p;
}

double farthest_distance(const Figure& f, Point p) {
    double best = 0.0;
    for (const Edge& e : f.edges()) {
        best = std::max({best, dist(p, e.start), dist(p, e.end)});
        if (!e.is_arc()) continue;
        const Point away = e.center - p;
        const double na = norm(away);
        if (na == 0.0) {
            best = std::max(best, e.radius);
            continue;
        }
        const Point far = e.center + (e.radius / na) * away;
        if (e.arc_covers(far)) best = std::max(best, na + e.radius);
    }
    return best;
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 1]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 1]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

double point_set_diameter(std::span<const Point> pts) {
    const std::vector<Point> h = convex_hull(std::vector<Point>(pts.begin(), pts.end()));
    const std::size_t m = h.size();
    if (m < 2) return 0.0;
    if (m == 2) return dist(h[0], h[1]);
    double best = 0.0;
    std::size_t j = 1;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t ni = (i + 1) % m;
        const Point base = h[ni] - h[i];
        while (std::abs(cross(base, h[(j + 1) % m] - h[i])) > std::abs(cross(base, h[j] - h[i]))) {
            j = (j + 1) % m;
        }
        best = std::max({best, dist(h[i], h[j]), dist(h[ni], h[j])});
    }
    return best;
}

double diameter(const Figure& f, const Tolerance& tol) {
    const auto edges = f.edges();
    std::vector<Point> cands = f.vertices();
    double best = 0.0;
    for (const Edge& a : edges) {
        if (!a.is_arc()) continue;
        // vertex against arc: the farthest arc point lies opposite the vertex
        for (const Edge& v : edges) {
            const Point away = a.center - v.start;
            const double na = norm(away);
            if (na == 0.0) continue;
            const Point far = a.center + (a.radius / na) * away;
            if (a.arc_covers(far)) best = std::max(best, na + a.radius);
        }
        for (const Edge& b : edges) {
            if (!b.is_arc()) continue;
            const double d = dist(a.center, b.center);
            if (d == 0.0) {
                // concentric: antipodal points give r1 + r2
                const auto [s1, w1] = ccw_interval(a);
                const auto [s2, w2] = ccw_interval(b);
                const double s2_opposite = wrap(s2 + std::numbers::pi);
                const bool meets = wrap(s2_opposite - s1) <= w1 || wrap(s1 - s2_opposite) <= w2;
                if (meets) best = std::max(best, a.radius + b.radius);
                continue;
            }
            const Point u = {(b.center.x - a.center.x) / d, (b.center.y - a.center.y) / d};
            for (double sa : {-1.0, 1.0}) {
                const Point pa = a.center + (sa * a.radius) * u;
                if (!a.arc_covers(pa)) continue;
                for (double sb : {-1.0, 1.0}) {
                    const Point pb = b.center + (sb * b.radius) * u;
                    if (b.arc_covers(pb)) best = std::max(best, dist(pa, pb));
                }
            }
        }
    }
    if (f.has_arcs()) {
        const auto pts = discretize_points(f, tol.arc_max_sagitta);
        cands.insert(cands.end(), pts.begin(), pts.end());
    }
    return std::max(best, point_set_diameter(cands));
}

bool is_convex(const Figure& f, const Tolerance&) {
    const auto edges = f.edges();
    const std::size_t n = edges.size();
    const double angle_eps = 1e-9;
    double turning = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Edge& e = edges[i];
        if (e.is_arc()) {
            if (e.orientation == Orientation::cw) return false;
            turning += e.sweep();
        }
        const Point t_in = edges[(i + n - 1) % n].tangent(1.0);
        const Point t_out = e.tangent(0.0);
        const double c = cross(t_in, t_out);
        const double d = dot(t_in, t_out);
        if (c < -angle_eps) return false;
        if (std::abs(c) <= angle_eps && d < 0.0) return false;  // cusp
        turning += std::atan2(c, d);
    }
    return turning <= kTwoPi + 1e-6;
}

BoundingBox bounding_box(const Figure& f) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    BoundingBox b{{inf, inf}, {-inf, -inf}};
    for (const Edge& e : f.edges()) {
        const BoundingBox eb = edge_box(e);
        b.min = {std::min(b.min.x, eb.min.x), std::min(b.min.y, eb.min.y)};
        b.max = {std::max(b.max.x, eb.max.x), std::max(b.max.y, eb.max.y)};
    }
    return b;
}

Location contains(const Figure& f, Point p, const Tolerance& tol) {
    return detail::PointClassifier(f, tol.geom_eps).classify(p);
}

// ---------------------------------------------------------------------------
// Discretization and hull
// ---------------------------------------------------------------------------

std::size_t chord_count(double radius, double sweep, double max_sagitta) {
    if (!(max_sagitta > 0.0)) throw DomainError("max_sagitta must be positive");
    const double ratio = max_sagitta / (2.0 * radius);
    const double step = ratio >= 1.0 ? std::numbers::pi : 4.0 * std::asin(std::sqrt(ratio));
    const auto n = static_cast<std::size_t>(std::ceil(sweep / std::min(step, std::numbers::pi)));
    return std::max<std::size_t>(n, sweep >= kTwoPi ? 3 : 1);
}

std::vector<Point> discretize_points(const Figure& f, double max_sagitta) {
    if (!(max_sagitta > 0.0)) throw DomainError("max_sagitta must be positive");
    std::vector<Point> pts;
    for (const Edge& e : f.edges()) {
        pts.push_back(e.start);
        if (!e.is_arc()) continue;
        const std::size_t n = chord_count(e.radius, e.sweep(), max_sagitta);
        for (std::size_t k = 1; k < n; ++k) pts.push_back(e.at(static_cast<double>(k) / static_cast<double>(n)));
    }
    return pts;
}

Figure discretize(const Figure& f, double max_sagitta) {
    if (!(max_sagitta > 0.0)) throw DomainError("max_sagitta must be positive");
    if (!f.has_arcs()) return f;
    const auto pts = discretize_points(f, max_sagitta);
    return Figure::polygon(pts);
}

Figure convex_hull(const Figure& f, const Tolerance& tol) {
    struct Tagged {
        Point p;
        std::size_t edge;
        std::size_t k;
    };
    const auto edges = f.edges();
    const std::size_t n = edges.size();
    std::vector<std::size_t> chords(n);
    std::vector<Tagged> pts;
    for (std::size_t e = 0; e < n; ++e) {
        const Edge& edge = edges[e];
        chords[e] = edge.is_arc() ? chord_count(edge.radius, edge.sweep(), tol.arc_max_sagitta) : 1;
        for (std::size_t k = 0; k < chords[e]; ++k) {
            pts.push_back({edge.at(static_cast<double>(k) / static_cast<double>(chords[e])), e, k});
        }
    }
    std::vector<Point> raw;
    raw.reserve(pts.size());
    for (const auto& t : pts) raw.push_back(t.p);
    const std::vector<Point> hull = convex_hull(raw);
    if (hull.size() < 3) throw InvalidFigure("hull is degenerate");

    // Map hull points back to their (edge, chord index) tags.
    std::vector<const Tagged*> tags;
    tags.reserve(hull.size());
    {
        std::vector<std::size_t> idx(pts.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        auto less = [&](std::size_t i, std::size_t j) {
            return pts[i].p.x < pts[j].p.x || (pts[i].p.x == pts[j].p.x && pts[i].p.y < pts[j].p.y);
        };
        std::sort(idx.begin(), idx.end(), less);
        for (Point h : hull) {
            auto it = std::lower_bound(idx.begin(), idx.end(), h, [&](std::size_t i, Point q) {
                return pts[i].p.x < q.x || (pts[i].p.x == q.x && pts[i].p.y < q.y);
            });
            tags.push_back(&pts[*it]);
        }
    }

    // A hull step follows arc `e` when it joins consecutive chord points of e.
    auto arc_step = [&](const Tagged& a, const Tagged& b) -> std::optional<std::size_t> {
        const Edge& ea = edges[a.edge];
        if (ea.is_arc() && ea.orientation == Orientation::ccw) {
            if (b.edge == a.edge && b.k == a.k + 1) return a.edge;
            if (b.k == 0 && b.edge == (a.edge + 1) % n && a.k + 1 == chords[a.edge]) return a.edge;
        }
        return std::nullopt;
    };

    const std::size_t m = hull.size();
    std::vector<std::optional<std::size_t>> step(m);
    for (std::size_t j = 0; j < m; ++j) step[j] = arc_step(*tags[j], *tags[(j + 1) % m]);

    const bool single_arc = std::all_of(step.begin(), step.end(), [&](const auto& s) { return s && *s == *step[0]; });
    if (single_arc) {
        const Edge& e = edges[*step[0]];
        if (!e.full_turn) throw InvalidFigure("hull is degenerate");
        return Figure({Edge::circle(e.center, e.radius)}, tol);
    }

    // Begin at a step that does not continue the previous one.
    std::size_t first = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const auto& prev = step[(j + m - 1) % m];
        if (!(step[j] && prev && *prev == *step[j])) {
            first = j;
            break;
        }
    }
    std::vector<Edge> out;
    for (std::size_t c = 0; c < m;) {
        const std::size_t j = (first + c) % m;
        if (!step[j]) {
            out.push_back(Edge::segment(hull[j], hull[(j + 1) % m]));
            ++c;
            continue;
        }
        std::size_t run = 1;
        while (c + run < m && step[(first + c + run) % m] && *step[(first + c + run) % m] == *step[j]) ++run;
        const Edge& e = edges[*step[j]];
        out.push_back(Edge::arc(hull[j], hull[(j + run) % m], e.center, e.radius, Orientation::ccw));
        c += run;
    }
    return Figure(std::move(out), tol);
}

}  // namespace diamlab

#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diamlab {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Boundary is not closed, not simple, or an edge is malformed.
class InvalidFigure : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation received an argument outside its mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Zero-area input. Raised at construction, and by ratios against area.
class DegenerateFigure : public InvalidFigure {
public:
    using InvalidFigure::InvalidFigure;
};

// ---------------------------------------------------------------------------
// Basic types
// ---------------------------------------------------------------------------

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Point&, const Point&) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

/// Centralized tolerances; every operation takes one explicitly.
struct Tolerance {
    double geom_eps = 1e-12;
    double area_tol = 1e-9;
    double arc_max_sagitta = 1e-9;

    void validate() const;
};

struct Circle {
    Point center;
    double radius = 1.0;

    Circle() = default;
    Circle(Point c, double r);

    bool in_disc(Point p) const { return dist(p, center) <= radius; }
};

enum class EdgeKind { segment, arc };
enum class Orientation { ccw, cw };

/// One boundary piece: a straight segment or a circular arc.
///
/// Arcs keep their center, radius and turning direction. A full circle is a
/// single arc with `start == end` and `full_turn` set.
struct Edge {
    EdgeKind kind = EdgeKind::segment;
    Point start;
    Point end;
    Point center;
    double radius = 0.0;
    Orientation orientation = Orientation::ccw;
    bool full_turn = false;

    static Edge segment(Point a, Point b);
    static Edge arc(Point a, Point b, Point center, double radius, Orientation o);
    static Edge circle(Point center, double radius, Orientation o = Orientation::ccw);

    bool is_arc() const { return kind == EdgeKind::arc; }

    /// Angle swept by an arc, in (0, 2pi]. Zero for segments.
    double sweep() const;
    double length() const;
    /// Point at fraction `t` in [0, 1] along the edge.
    Point at(double t) const;
    /// Unit tangent in the direction of travel at fraction `t`.
    Point tangent(double t) const;
    /// Same edge traversed backwards.
    Edge reversed() const;
    /// Shortest distance from `p` to this edge.
    double distance_to(Point p) const;
    /// True when `p`, assumed on the supporting circle, lies within the arc's
    /// angular range (with `angle_tol` radians of slack at each end).
    bool arc_covers(Point p, double angle_tol = 0.0) const;
    /// Start angle of the arc, measured around its center.
    double start_angle() const;
};

/// Closed, simple, positively oriented boundary of segments and arcs.
///
/// Construction validates and normalizes: zero-length edges are rejected,
/// consecutive collinear segments are merged, negatively oriented input is
/// reversed, and each edge's end is snapped to the next edge's start so the
/// boundary is closed bit-for-bit.
class Figure {
public:
    explicit Figure(std::vector<Edge> edges, const Tolerance& tol = {});

    /// Polygon through `vertices` (implicitly closed).
    static Figure polygon(std::span<const Point> vertices, const Tolerance& tol = {});

    std::span<const Edge> edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }
    const Edge& operator[](std::size_t i) const { return edges_[i]; }
    bool has_arcs() const;
    /// Start points of every edge, in boundary order.
    std::vector<Point> vertices() const;

private:
    std::vector<Edge> edges_;
};

struct BoundingBox {
    Point min;
    Point max;

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    double area() const { return width() * height(); }
};

enum class Location { inside, boundary, outside };

const char* to_string(Location loc);

// ---------------------------------------------------------------------------
// Operations (pure functions)
// ---------------------------------------------------------------------------

/// Signed area enclosed by an edge list: chord shoelace plus the signed
/// circular-segment term r^2 (phi - sin phi) / 2 of every arc.
double signed_area(std::span<const Edge> edges);

double area(const Figure& f);
double perimeter(const Figure& f);
double diameter(const Figure& f, const Tolerance& tol = {});
/// Largest distance from `p` to any boundary point of `f`.
double farthest_distance(const Figure& f, Point p);
bool is_convex(const Figure& f, const Tolerance& tol = {});
Location contains(const Figure& f, Point p, const Tolerance& tol = {});
BoundingBox bounding_box(const Figure& f);

/// Chord approximation: every arc becomes a chain of chords whose sagitta is
/// at most `max_sagitta`. Segment edges pass through untouched.
Figure discretize(const Figure& f, double max_sagitta);

/// Boundary points of the chord approximation, in order (no repeated start).
std::vector<Point> discretize_points(const Figure& f, double max_sagitta);

/// Number of chords an arc of `radius` and `sweep` needs for `max_sagitta`.
std::size_t chord_count(double radius, double sweep, double max_sagitta);

/// Convex hull. Hull pieces that follow a convex arc of the input are
/// returned as exact arcs; everything else becomes straight segments.
Figure convex_hull(const Figure& f, const Tolerance& tol = {});

/// Convex hull of a point set (counter-clockwise, collinear points removed).
std::vector<Point> convex_hull(std::vector<Point> pts);

/// Largest pairwise distance of a point set.
double point_set_diameter(std::span<const Point> pts);

/// Throws InvalidFigure if the edges do not form a simple closed boundary.
void check_simple(std::span<const Edge> edges, const Tolerance& tol);

}  // namespace diamlab

#pragma once

#include "diamlab/geometry.hpp"

#include <span>
#include <string>

namespace diamlab {

enum class MuMethod { analytic, clipped, oracle };

const char* to_string(MuMethod m);

/// Exterior-fraction measurement of a figure against a disc.
struct MuReport {
    double total_area = 0.0;
    double interior_area = 0.0;  ///< inside the disc
    double exterior_area = 0.0;
    double mu = 0.0;             ///< exterior_area / total_area
    MuMethod method = MuMethod::analytic;
    double est_error = 0.0;
};

struct DiscIntersection {
    double area = 0.0;
    double est_error = 0.0;
    MuMethod method = MuMethod::analytic;
};

/// Signed area of disc(c) intersected with triangle (c.center, a, b).
double disc_triangle_area(Point a, Point b, const Circle& c);

/// Area of a simple polygon (either orientation; signed by orientation)
/// intersected with a disc.
double polygon_disc_intersection_area(std::span<const Point> polygon, const Circle& c);

/// Shoelace area, positive for counter-clockwise vertex order.
double polygon_area(std::span<const Point> polygon);

/// Area of f intersected with disc(c). Arcs lying on the circle itself are
/// summed as exact sectors; all other arcs are replaced by chords of sagitta
/// at most tol.arc_max_sagitta, and est_error = perimeter * sagitta.
DiscIntersection disc_intersection(const Figure& f, const Circle& c, const Tolerance& tol = {});
double disc_intersection_area(const Figure& f, const Circle& c, const Tolerance& tol = {});

/// area(f) - disc_intersection_area(f, c), clamped at zero within est_error.
double exterior_area(const Figure& f, const Circle& c, const Tolerance& tol = {});

/// Throws DegenerateFigure when area(f) is zero.
MuReport mu(const Figure& f, const Circle& c, const Tolerance& tol = {});

enum class LittlewoodStatus { ok, violated, not_applicable };

const char* to_string(LittlewoodStatus s);

struct LittlewoodCheck {
    LittlewoodStatus status = LittlewoodStatus::ok;
    double area = 0.0;
    double diameter = 0.0;
    double bound = 0.0;  ///< pi / 4
};

/// Diameter <= 1 must imply area <= pi/4. Larger figures are not applicable.
LittlewoodCheck littlewood_check(const Figure& f, const Tolerance& tol = {});

}  // namespace diamlab

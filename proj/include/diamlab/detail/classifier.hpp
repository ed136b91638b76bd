#pragma once

#include "diamlab/geometry.hpp"

#include <vector>

namespace diamlab::detail {

/// Point-in-figure test prepared once per figure.
///
/// Arcs are split at their top and bottom points into y-monotone pieces so a
/// single horizontal ray crosses every piece at most once; the same half-open
/// rule then applies to segments and arc pieces alike.
class PointClassifier {
public:
    PointClassifier(const Figure& f, double eps);

    Location classify(Point p) const;

private:
    struct Segment {
        Point a;
        Point b;
    };
    struct ArcPiece {
        Point center;
        double radius;
        bool right;  // piece lies in the half x >= center.x
        Point p;
        Point q;
    };

    bool on_boundary(Point p) const;
    int crossings(Point p) const;

    std::vector<Segment> segments_;
    std::vector<ArcPiece> pieces_;
    double eps_;
    BoundingBox box_;
};

}  // namespace diamlab::detail

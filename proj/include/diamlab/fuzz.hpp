#pragma once

#include "diamlab/geometry.hpp"
#include "diamlab/littlewood.hpp"
#include "diamlab/rng.hpp"

#include <vector>

namespace diamlab::fuzz {

/// Random convex polygon (counter-clockwise, 3 to `max_vertices` vertices)
/// scaled so its diameter is uniform in [0.3, 1] * max_diameter.
std::vector<Point> convex_polygon(Rng& rng, double max_diameter = 1.0, std::size_t max_vertices = 12);

/// Radial profile of a convex polygon seen from its vertex `origin`, rotated
/// so the outgoing edge at that vertex points along theta = 0.
RadialProfile radial_profile(const std::vector<Point>& polygon, std::size_t origin, std::size_t samples);

}  // namespace diamlab::fuzz

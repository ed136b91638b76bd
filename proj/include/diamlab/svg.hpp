#pragma once

#include "diamlab/shapes.hpp"

#include <string>

namespace diamlab {

struct SvgStyle {
    double scale = 400.0;  ///< pixels per unit length
    double margin = 0.12;  ///< in figure units
};

/// Figure boundary, reference circle, the part of the figure outside the
/// circle shaded, labels for those of K, L, C, D that lie in the figure, and
/// a "mu ~ x.xxxx" caption. Output depends only on the inputs.
std::string render_svg(const NamedShape& shape, const SvgStyle& style = {}, const Tolerance& tol = {});

}  // namespace diamlab

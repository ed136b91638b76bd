#include "diamlab/shapes.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace diamlab {

using namespace closed_form;
using Orientation::ccw;
using Orientation::cw;

std::optional<double> NamedShape::expect(const std::string& quantity) const {
    for (const auto& e : expected) {
        if (e.quantity == quantity) return e.value;
    }
    return std::nullopt;
}

NamedShape unit_circle() {
    return {"unit_circle",
            Figure({Edge::circle(pts::O, 0.5)}),
            reference_circle(),
            {
                // 0.78539816339744828
                {"area", pi / 4.0, "closed form: pi r^2 with r = 1/2, equality case of area <= pi/4"},
                {"perimeter", pi, "identity: 2 pi r"},
                {"diameter", 1.0, "identity: 2 r"},
                {"mu", 0.0, "identity: the figure is the reference disc"},
            }};
}

NamedShape mixed_triangle() {
    std::vector<Edge> e{
        Edge::segment(pts::K, pts::L),
        Edge::arc(pts::L, pts::C, pts::K, 1.0, ccw),
        Edge::arc(pts::C, pts::K, pts::L, 1.0, ccw),
    };
    return {"mixed_triangle",
            Figure(std::move(e)),
            reference_circle(),
            {
                // 0.61418484930128783
                {"area", mixed_area, "closed form: (8 pi - 6 sqrt 3) / 24"},
                {"perimeter", 1.0 + 2.0 * pi / 3.0, "computed: |KL| + two unit arcs of pi/3"},
                {"diameter", 1.0, "closed form: KL is a longest chord"},
                // 0.36061743928803770
                {"mu", mu_bound, "closed form: (5 pi - 6 sqrt 3) / (8 pi - 6 sqrt 3)"},
            }};
}

NamedShape lens() {
    // Arc about K runs D -> L -> C, arc about L runs C -> K -> D.
    std::vector<Edge> e{
        Edge::arc(pts::D, pts::L, pts::K, 1.0, ccw),
        Edge::arc(pts::L, pts::C, pts::K, 1.0, ccw),
        Edge::arc(pts::C, pts::K, pts::L, 1.0, ccw),
        Edge::arc(pts::K, pts::D, pts::L, 1.0, ccw),
    };
    return {"lens",
            Figure(std::move(e)),
            reference_circle(),
            {
                // 1.2283696986087567
                {"area", lens_area, "computed: two-circle lens 2 pi/3 - sqrt 3 / 2"},
                {"perimeter", 4.0 * pi / 3.0, "computed: two unit arcs of 2 pi/3"},
                {"diameter", sqrt3, "computed: |CD| = sqrt 3"},
                {"mu", (lens_area - pi / 4.0) / lens_area, "computed: reference disc lies inside the lens"},
            }};
}

NamedShape reuleaux() {
    std::vector<Edge> e{
        Edge::arc(pts::K, pts::L, pts::C, 1.0, ccw),
        Edge::arc(pts::L, pts::C, pts::K, 1.0, ccw),
        Edge::arc(pts::C, pts::K, pts::L, 1.0, ccw),
    };
    return {"reuleaux",
            Figure(std::move(e)),
            reference_circle(),
            {
                // 0.70477092301045792
                {"area", reuleaux_area, "computed: (pi - sqrt 3) / 2, oracle-confirmed"},
                // 3.1415926535897931
                {"perimeter", pi, "closed form: Barbier, pi * width"},
                {"diameter", 1.0, "identity: constant width 1"},
            }};
}

NamedShape isosceles(double apex_angle) {
    if (!(apex_angle > 0.0) || apex_angle > pi / 3.0 + 1e-15) {
        throw DomainError("apex angle must lie in (0, pi/3]");
    }
    const Point m = pts::K + Point{std::cos(apex_angle), std::sin(apex_angle)};
    const std::vector<Point> v{pts::K, pts::L, m};
    NamedShape s{"isosceles",
                 Figure::polygon(v),
                 reference_circle(),
                 {
                     {"area", 0.5 * std::sin(apex_angle), "identity: 1/2 |KL| |KM| sin(apex)"},
                     {"diameter", 1.0, "identity: legs of length 1, base 2 sin(apex/2) <= 1"},
                 }};
    if (std::abs(apex_angle - pi / 3.0) <= 1e-15) {
        s.expected.push_back({"mu", equilateral_mu, "computed: triangle KLC, 1/2 - pi / (6 sqrt 3), oracle-confirmed"});
    }
    return s;
}

NamedShape exterior_crescent() {
    std::vector<Edge> e{
        Edge::arc(pts::K, pts::L, pts::O, 0.5, cw),
        Edge::arc(pts::L, pts::C, pts::K, 1.0, ccw),
        Edge::arc(pts::C, pts::K, pts::L, 1.0, ccw),
    };
    return {"exterior_crescent",
            Figure(std::move(e)),
            reference_circle(),
            {
                // 0.22148576760565425
                {"area", mixed_exterior, "closed form: (5 pi - 6 sqrt 3) / 24"},
                {"diameter", 1.0, "closed form: KL is a longest chord"},
                {"mu", 1.0, "closed form: disjoint from the open reference disc"},
            }};
}

NamedShape radial_figure(const RadialProfile& profile, const Tolerance& tol) {
    std::vector<Point> v{pts::O};
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const double r = profile.rho()[i];
        const double t = profile.theta()[i];
        const Point p{r * std::cos(t), r * std::sin(t)};
        if (dist(p, v.back()) > tol.geom_eps) v.push_back(p);
    }
    while (v.size() > 1 && dist(v.back(), v.front()) <= tol.geom_eps) v.pop_back();
    if (v.size() < 3) throw DomainError("radial profile is degenerate");
    return {"radial", Figure::polygon(v, tol), std::nullopt, {}};
}

std::vector<std::string> shape_names() {
    return {"unit_circle", "mixed_triangle", "lens", "reuleaux", "isosceles", "exterior_crescent"};
}

NamedShape make_shape(const std::string& name) {
    if (name == "unit_circle") return unit_circle();
    if (name == "mixed_triangle") return mixed_triangle();
    if (name == "lens") return lens();
    if (name == "reuleaux") return reuleaux();
    if (name == "exterior_crescent") return exterior_crescent();
    if (name == "isosceles") return isosceles(pi / 4.0);
    if (name.rfind("isosceles:", 0) == 0) {
        const std::string arg = name.substr(10);
        // either radians or "pi/<n>"
        const bool over_pi = arg.rfind("pi/", 0) == 0;
        const std::string num = over_pi ? arg.substr(3) : arg;
        char* end = nullptr;
        const double v = std::strtod(num.c_str(), &end);
        if (num.empty() || end != num.c_str() + num.size()) throw std::out_of_range("bad apex angle: " + arg);
        NamedShape s = isosceles(over_pi ? pi / v : v);
        s.name = name;
        return s;
    }
    throw std::out_of_range("unknown shape: " + name);
}

std::vector<NamedShape> library() {
    std::vector<NamedShape> out{unit_circle(), mixed_triangle(), lens(), reuleaux(), isosceles(pi / 4.0),
                                isosceles(pi / 3.0), exterior_crescent()};
    out[4].name = "isosceles:pi/4";
    out[5].name = "isosceles:pi/3";
    return out;
}

}  // namespace diamlab

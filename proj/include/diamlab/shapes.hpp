#pragma once

#include "diamlab/geometry.hpp"
#include "diamlab/littlewood.hpp"

#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace diamlab {

/// Fixed construction points. KL is the shared unit diameter; C and D are
/// where the unit circles about K and L meet.
namespace pts {
inline constexpr Point K{-0.5, 0.0};
inline constexpr Point L{0.5, 0.0};
inline constexpr Point C{0.0, 0.5 * std::numbers::sqrt3};
inline constexpr Point D{0.0, -0.5 * std::numbers::sqrt3};
inline constexpr Point O{0.0, 0.0};
}  // namespace pts

/// The unit-diameter circle on KL.
inline Circle reference_circle() { return Circle(pts::O, 0.5); }

struct ExpectedValue {
    std::string quantity;  ///< "area", "perimeter", "diameter" or "mu"
    double value;
    std::string provenance;
};

struct NamedShape {
    std::string name;
    Figure figure;
    std::optional<Circle> reference;
    std::vector<ExpectedValue> expected;

    std::optional<double> expect(const std::string& quantity) const;
};

/// Closed-form values of the headline quantities.
namespace closed_form {
inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt3 = std::numbers::sqrt3;
inline constexpr double mixed_area = (8.0 * pi - 6.0 * sqrt3) / 24.0;
inline constexpr double mixed_exterior = (5.0 * pi - 6.0 * sqrt3) / 24.0;
inline constexpr double mixed_interior = pi / 8.0;
inline constexpr double mu_bound = (5.0 * pi - 6.0 * sqrt3) / (8.0 * pi - 6.0 * sqrt3);
inline constexpr double lens_area = 2.0 * pi / 3.0 - sqrt3 / 2.0;
inline constexpr double reuleaux_area = (pi - sqrt3) / 2.0;
/// Triangle KLC against the reference disc: 1/2 - pi / (6 sqrt 3).
inline constexpr double equilateral_mu = 0.5 - pi / (6.0 * sqrt3);
}  // namespace closed_form

NamedShape unit_circle();
NamedShape mixed_triangle();
NamedShape lens();
NamedShape reuleaux();
/// Triangle K, L, M with |KM| = |KL| = 1 and angle LKM = `apex_angle`.
/// Valid for apex_angle in (0, pi/3]; pi/3 gives the equilateral KLC.
NamedShape isosceles(double apex_angle);
NamedShape exterior_crescent();
/// Polygon through (rho_i cos theta_i, rho_i sin theta_i) with O on the boundary.
NamedShape radial_figure(const RadialProfile& profile, const Tolerance& tol = {});

/// Names accepted by `make_shape`.
std::vector<std::string> shape_names();
/// Looks up a library shape; "isosceles:<radians>" picks the apex angle.
/// Throws std::out_of_range for unknown names.
NamedShape make_shape(const std::string& name);
/// Every named library shape (isosceles at pi/4 and pi/3).
std::vector<NamedShape> library();

}  // namespace diamlab

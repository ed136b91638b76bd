#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamlab/fuzz.hpp"
#include "diamlab/geometry.hpp"
#include "diamlab/measures.hpp"
#include "diamlab/oracle.hpp"
#include "diamlab/shapes.hpp"
#include "support/slices.hpp"

#include <cmath>
#include <numbers>

using namespace diamlab;
using std::numbers::pi;
using std::numbers::sqrt3;

namespace {

const std::vector<Point> kSquare{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
const std::vector<Point> kHexL{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};

Figure square() { return Figure::polygon(kSquare); }

}  // namespace

TEST_CASE("area of the basic figures") {
    CHECK(area(unit_circle().figure) == doctest::Approx(pi / 4).epsilon(1e-15));
    CHECK(area(square()) == 1.0);
    CHECK(std::abs(area(mixed_triangle().figure) - (8 * pi - 6 * sqrt3) / 24) < 1e-12);
    // independent slice integration
    CHECK(std::abs(area(mixed_triangle().figure) - slices::mixed_area()) < 1e-10);
    CHECK(std::abs(area(lens().figure) - slices::lens_area()) < 1e-10);
    CHECK(std::abs(area(reuleaux().figure) - slices::reuleaux_area()) < 1e-10);
}

TEST_CASE("perimeter") {
    CHECK(std::abs(perimeter(reuleaux().figure) - pi) < 1e-12);
    CHECK(perimeter(square()) == 4.0);
    CHECK(std::abs(perimeter(unit_circle().figure) - pi) < 1e-15);
}

TEST_CASE("diameter") {
    CHECK(std::abs(diameter(unit_circle().figure) - 1.0) < 1e-12);
    CHECK(std::abs(diameter(mixed_triangle().figure) - 1.0) < 1e-12);
    CHECK(std::abs(diameter(lens().figure) - dist(pts::C, pts::D)) < 1e-12);
    CHECK(std::abs(diameter(square()) - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(diameter(reuleaux().figure) - 1.0) < 1e-12);

    SUBCASE("a large arc beats its chord endpoints") {
        // three quarters of a unit circle closed by a chord
        const Point a{1, 0};
        const Point b{0, -1};
        const Figure f({Edge::arc(a, b, {0, 0}, 1.0, Orientation::ccw), Edge::segment(b, a)});
        CHECK(std::abs(diameter(f) - 2.0) < 1e-12);
    }
}

TEST_CASE("diameter agrees with a dense boundary sample") {
    for (const NamedShape& s : library()) {
        const double exact = diameter(s.figure);
        const double sampled = point_set_diameter(discretize_points(s.figure, 1e-7));
        CHECK(exact >= sampled - 1e-12);
        CHECK(exact <= sampled + 1e-6);
    }
}

TEST_CASE("convexity") {
    CHECK(is_convex(mixed_triangle().figure));
    CHECK_FALSE(is_convex(exterior_crescent().figure));
    CHECK(is_convex(square()));
    CHECK(is_convex(lens().figure));
    CHECK(is_convex(reuleaux().figure));
    CHECK(is_convex(unit_circle().figure));
    CHECK_FALSE(is_convex(Figure::polygon(kHexL)));
}

TEST_CASE("point classification") {
    const Figure f = mixed_triangle().figure;
    CHECK(contains(f, {0, 0.1}) == Location::inside);
    CHECK(contains(f, {0, 0}) == Location::boundary);
    CHECK(contains(f, {0, 0.9}) == Location::outside);
    CHECK(contains(f, pts::C) == Location::boundary);
    CHECK(contains(f, pts::K) == Location::boundary);
    CHECK(contains(f, {0, -0.1}) == Location::outside);
    CHECK(contains(f, {0.3, 0.5}) == Location::inside);
    CHECK(std::string(to_string(Location::boundary)) == "boundary");

    SUBCASE("analytic membership on random points") {
        Rng rng(11);
        for (int i = 0; i < 20000; ++i) {
            const Point p{rng.uniform(-0.6, 0.6), rng.uniform(-0.1, 0.95)};
            const double top = slices::lens_top(p.x);
            const double margin = std::min({std::abs(p.y), std::abs(p.y - top)});
            if (margin < 1e-9 || std::abs(p.x) > 0.5 - 1e-9) continue;
            const bool in = p.y > 0 && p.y < top;
            CHECK((contains(f, p) == Location::inside) == in);
        }
    }
}

TEST_CASE("convex hull") {
    SUBCASE("convex input is unchanged") {
        const Figure h = convex_hull(square());
        CHECK(area(h) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(h.size() == 4);
    }
    SUBCASE("L-shaped hexagon") {
        const Figure f = Figure::polygon(kHexL);
        CHECK(area(f) == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(std::abs(area(convex_hull(f)) - 3.5) < 1e-12);
        CHECK(std::abs(diameter(convex_hull(f)) - diameter(f)) < 1e-12);
    }
    SUBCASE("exterior crescent") {
        const Figure f = exterior_crescent().figure;
        const Figure h = convex_hull(f);
        CHECK(area(h) > area(f));
        CHECK(std::abs(diameter(h) - 1.0) < 1e-9);
        // the hull is the mixed triangle: both unit arcs survive exactly
        CHECK(std::abs(area(h) - area(mixed_triangle().figure)) < 1e-12);
        CHECK(is_convex(h));
    }
    SUBCASE("library shapes") {
        const Tolerance tol;
        for (const NamedShape& s : library()) {
            CAPTURE(s.name);
            const Figure h = convex_hull(s.figure);
            CHECK(area(h) >= area(s.figure) - 1e-12);
            CHECK(std::abs(diameter(h) - diameter(s.figure)) <= tol.arc_max_sagitta);
        }
    }
    SUBCASE("point set hull drops collinear points") {
        const auto h = convex_hull(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
        CHECK(h.size() == 4);
    }
}

TEST_CASE("discretization") {
    SUBCASE("polygons pass through") {
        const Figure d = discretize(square(), 1e-9);
        REQUIRE(d.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) CHECK(d[i].start == square()[i].start);
    }
    SUBCASE("circle and mixed triangle at sagitta 1e-9") {
        CHECK(std::abs(area(discretize(unit_circle().figure, 1e-9)) - pi / 4) < 1e-8);
        CHECK(std::abs(area(discretize(mixed_triangle().figure, 1e-9)) - (8 * pi - 6 * sqrt3) / 24) < 1e-8);
    }
    SUBCASE("every chord respects the sagitta") {
        const double s = 1e-5;
        const Figure d = discretize(reuleaux().figure, s);
        for (const Edge& e : d.edges()) {
            const double half = dist(e.start, e.end) / 2;
            CHECK(1.0 - std::sqrt(1.0 - half * half) <= s * (1 + 1e-9));
        }
    }
    SUBCASE("error decays with the sagitta") {
        // chord error is quadratic in chord length, so linear in the sagitta
        for (const NamedShape& s : {unit_circle(), mixed_triangle(), reuleaux(), lens()}) {
            CAPTURE(s.name);
            double prev = INFINITY;
            for (double sag = 1e-3; sag > 1e-7; sag /= 2) {
                const double err = area(s.figure) - area(discretize(s.figure, sag));
                CHECK(err > 0.0);  // inscribed chords lose area
                CHECK(err <= perimeter(s.figure) * sag);
                CHECK(err < prev);
                if (std::isfinite(prev)) CHECK(prev / err > 1.4);
                prev = err;
            }
        }
    }
    SUBCASE("chord count") {
        CHECK(chord_count(1.0, pi / 3, 1.0) == 1);
        CHECK(chord_count(1.0, 2 * pi, 1e-9) > 1000);
        CHECK_THROWS_AS(discretize(square(), 0.0), DomainError);
    }
}

TEST_CASE("construction errors and normalization") {
    SUBCASE("open boundary") {
        CHECK_THROWS_AS(Figure({Edge::segment({0, 0}, {1, 0}), Edge::segment({1, 0}, {1, 1}),
                                Edge::segment({1, 1}, {0, 0.5})}),
                        InvalidFigure);
    }
    SUBCASE("self-intersecting bow tie") {
        CHECK_THROWS_AS(Figure::polygon(std::vector<Point>{{0, 0}, {1, 1}, {1, 0}, {0, 1}}), InvalidFigure);
    }
    SUBCASE("boundary touching itself") {
        CHECK_THROWS_AS(Figure::polygon(std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {1, 0}, {0, 2}}), InvalidFigure);
    }
    SUBCASE("zero-length segment") {
        CHECK_THROWS_AS(Edge::segment({1, 1}, {1, 1}), InvalidFigure);
    }
    SUBCASE("collinear points enclose nothing") {
        CHECK_THROWS_AS(Figure::polygon(std::vector<Point>{{0, 0}, {1, 0}, {2, 0}}), DegenerateFigure);
    }
    SUBCASE("arc endpoints off the circle") {
        CHECK_THROWS_AS(Edge::arc({1, 0}, {0, 1.1}, {0, 0}, 1.0, Orientation::ccw), InvalidFigure);
    }
    SUBCASE("negative orientation is reversed") {
        const std::vector<Point> cw{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
        const Figure f = Figure::polygon(cw);
        CHECK(area(f) == 1.0);
        CHECK(signed_area(f.edges()) > 0);
    }
    SUBCASE("collinear consecutive segments merge") {
        const Figure f = Figure::polygon(std::vector<Point>{{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}});
        CHECK(f.size() == 4);
    }
    SUBCASE("reversed arc-bounded input") {
        std::vector<Edge> rev;
        const Figure m = mixed_triangle().figure;
        for (std::size_t i = m.size(); i-- > 0;) rev.push_back(m[i].reversed());
        const Figure f(rev);
        CHECK(std::abs(area(f) - area(m)) < 1e-15);
        CHECK(is_convex(f));
    }
    SUBCASE("tolerances validate") {
        Tolerance t;
        t.geom_eps = -1;
        CHECK_THROWS_AS(t.validate(), DomainError);
    }
}

TEST_CASE("edges") {
    const Edge a = Edge::arc(pts::L, pts::C, pts::K, 1.0, Orientation::ccw);
    CHECK(a.sweep() == doctest::Approx(pi / 3).epsilon(1e-15));
    CHECK(a.length() == doctest::Approx(pi / 3).epsilon(1e-15));
    CHECK(dist(a.at(0.5), pts::K) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(a.reversed().orientation == Orientation::cw);
    // inside the angular range: radial distance; outside it: nearest endpoint
    CHECK(std::abs(a.distance_to(pts::K + 2.0 * Point{std::cos(pi / 6), std::sin(pi / 6)}) - 1.0) < 1e-12);
    CHECK(std::abs(a.distance_to({-0.5, 2.0}) - dist(pts::C, {-0.5, 2.0})) < 1e-12);
    const Edge s = Edge::segment({0, 0}, {2, 0});
    CHECK(s.distance_to({1, 3}) == 3.0);
    CHECK(s.at(0.25) == Point{0.5, 0});
}

TEST_CASE("Monte Carlo area matches for every library shape") {
    for (const NamedShape& s : library()) {
        CAPTURE(s.name);
        const McEstimate e = mc_area(s.figure, 1'000'000, 99);
        CHECK(std::abs(e.value - area(s.figure)) <= 4 * e.std_error);
    }
}

TEST_CASE("Littlewood bound on convex library shapes") {
    for (const NamedShape& s : library()) {
        if (!is_convex(s.figure) || diameter(s.figure) > 1 + 1e-12) continue;
        CAPTURE(s.name);
        CHECK(area(s.figure) <= pi / 4 + 1e-9);
    }
}

TEST_CASE("random convex polygons") {
    Rng rng(2025);
    for (int i = 0; i < 200; ++i) {
        const auto poly = fuzz::convex_polygon(rng, 1.0);
        const Figure f = Figure::polygon(poly);
        CHECK(is_convex(f));
        CHECK(diameter(f) <= 1.0 + 1e-12);
        CHECK(diameter(f) == doctest::Approx(point_set_diameter(poly)).epsilon(1e-14));
        CHECK(area(convex_hull(f)) == doctest::Approx(area(f)).epsilon(1e-12));
        // centroid is inside a convex polygon
        Point c;
        for (Point p : poly) c = c + (1.0 / poly.size()) * p;
        CHECK(contains(f, c) == Location::inside);
    }
}

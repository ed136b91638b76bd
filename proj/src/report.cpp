#include "diamlab/report.hpp"

#include "diamlab/rng.hpp"
#include "diamlab/shapes.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace diamlab {

namespace {

using namespace closed_form;

Check equal(std::string name, double expected, std::string prov, double computed, double tol) {
    Check c{std::move(name), expected, std::move(prov), computed, std::abs(computed - expected), tol, "=", false};
    c.pass = c.abs_error <= tol;
    return c;
}

Check at_most(std::string name, double bound, std::string prov, double computed, double slack) {
    Check c{std::move(name), bound, std::move(prov), computed, std::abs(computed - bound), slack, "<=", false};
    c.pass = computed <= bound + slack;
    return c;
}

Check above(std::string name, double floor, std::string prov, double computed, double margin) {
    Check c{std::move(name), floor, std::move(prov), computed, std::abs(computed - floor), margin, ">", false};
    c.pass = computed > floor + margin;
    return c;
}

Check flag(std::string name, bool expected, std::string prov, bool computed) {
    return equal(std::move(name), expected ? 1.0 : 0.0, std::move(prov), computed ? 1.0 : 0.0, 0.0);
}

Check within_sigma(std::string name, double expected, std::string prov, const McEstimate& e) {
    return equal(std::move(name), expected, std::move(prov), e.value, 4.0 * e.std_error);
}

json box_json(const BoundingBox& b) {
    json j;
    j["min"] = to_json(b.min);
    j["max"] = to_json(b.max);
    return j;
}

}  // namespace

void VerificationReport::add(Check c) {
    overall = overall && c.pass;
    checks.push_back(std::move(c));
}

VerificationReport verify(const VerifyOptions& opt) {
    VerificationReport r;
    const Tolerance tol;
    const Circle ref = reference_circle();
    const NamedShape mixed = mixed_triangle();
    const NamedShape crescent = exterior_crescent();
    const NamedShape circle = unit_circle();
    const NamedShape rt = reuleaux();
    const NamedShape ln = lens();
    const NamedShape equi = isosceles(pi / 3.0);

    // exact arc arithmetic
    r.add(equal("mixed_triangle area (exact arcs)", mixed_area, "closed form: (8 pi - 6 sqrt 3) / 24",
                area(mixed.figure), 1e-9));
    r.add(equal("mixed_triangle diameter", 1.0, "closed form: KL is a longest chord", diameter(mixed.figure, tol),
                1e-9));
    r.add(flag("mixed_triangle is convex", true, "closed form: intersection of two unit discs and a half-plane",
               is_convex(mixed.figure, tol)));
    r.add(equal("unit_circle area at the bound", pi / 4.0, "closed form: pi r^2, r = 1/2", area(circle.figure),
                1e-9));

    // discretized arcs, tolerance set by the caller
    const double sag = tol.arc_max_sagitta;
    r.add(equal("mixed_triangle area (discretized)", mixed_area, "closed form: (8 pi - 6 sqrt 3) / 24",
                area(discretize(mixed.figure, sag)), opt.area_tol));
    r.add(equal("mixed_triangle exterior area", mixed_exterior, "closed form: (5 pi - 6 sqrt 3) / 24",
                exterior_area(mixed.figure, ref, tol), opt.area_tol));
    r.add(equal("mixed_triangle disc intersection", pi / 8.0, "closed form: half of the reference disc",
                disc_intersection_area(mixed.figure, ref, tol), opt.area_tol));
    const double mu_mixed = mu(mixed.figure, ref, tol).mu;
    r.add(equal("mixed_triangle mu", mu_bound, "closed form: (5 pi - 6 sqrt 3) / (8 pi - 6 sqrt 3)", mu_mixed,
                opt.area_tol));
    r.add(equal("mixed_triangle mu to two decimals", 0.36, "closed form: approximately 0.36",
                std::round(mu_mixed * 100.0) / 100.0, 1e-12));

    // Littlewood
    const RadialProfile sine = RadialProfile::sample([](double t) { return std::sin(t); }, 10'000);
    const RadialArea ra = radial_area(sine);
    r.add(equal("radial area of rho = sin", pi / 4.0, "closed form: disc of diameter 1 seen from its boundary",
                ra.direct, 1e-6));
    r.add(equal("max right-angle chord of rho = sin", 1.0, "identity: sin^2 + cos^2 = 1", max_chord_sq(sine),
                1e-12));
    r.add(equal("paired minus direct radial integral", 0.0, "identity: split at pi/2 and shift", ra.paired - ra.direct,
                1e-12));
    std::size_t lw_ok = 0;
    std::size_t lw_total = 0;
    for (const NamedShape& s : library()) {
        if (!is_convex(s.figure, tol) || diameter(s.figure, tol) > 1.0 + tol.geom_eps) continue;
        ++lw_total;
        if (littlewood_check(s.figure, tol).status == LittlewoodStatus::ok) ++lw_ok;
    }
    r.add(equal("convex library shapes within area pi/4", static_cast<double>(lw_total), "identity: diameter <= 1",
                static_cast<double>(lw_ok), 0.0));

    // lens
    r.add(equal("lens diameter", sqrt3, "computed: |CD| = sqrt 3", diameter(ln.figure, tol), 1e-9));
    r.add(flag("lens is outside the Littlewood domain", true, "computed: |CD| > 1",
               littlewood_check(ln.figure, tol).status == LittlewoodStatus::not_applicable));

    // convexity is necessary
    r.add(equal("exterior_crescent disc intersection", 0.0, "closed form: disjoint from the open disc",
                disc_intersection_area(crescent.figure, ref, tol), 1e-9));
    r.add(equal("exterior_crescent mu", 1.0, "closed form: entirely outside the disc", mu(crescent.figure, ref, tol).mu,
                0.0));
    r.add(flag("exterior_crescent is convex", false, "closed form: concave inner arc",
               is_convex(crescent.figure, tol)));

    // the equilateral triangle loses to the mixed triangle
    const double mu_equi = mu(equi.figure, ref, tol).mu;
    r.add(equal("isosceles(pi/3) mu", equilateral_mu, "computed: 1/2 - pi / (6 sqrt 3), oracle-confirmed", mu_equi,
                1e-9));
    r.add(above("mu gap mixed_triangle - isosceles(pi/3)", 0.0, "computed: margin 1e-3", mu_mixed - mu_equi, 1e-3));

    // Reuleaux
    r.add(equal("reuleaux perimeter", pi, "closed form: Barbier, pi * width", perimeter(rt.figure), 1e-9));
    r.add(equal("reuleaux area", reuleaux_area, "computed: (pi - sqrt 3) / 2, oracle-confirmed", area(rt.figure), 1e-9));
    r.add(at_most("reuleaux area below unit_circle area", area(circle.figure), "closed form: Blaschke-Lebesgue",
                  area(rt.figure), 0.0));

    // hulls
    const std::vector<Point> hex{{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}};
    r.add(equal("L-hexagon hull area", 3.5, "identity: shoelace", area(convex_hull(Figure::polygon(hex), tol)), 1e-12));
    const Figure hull = convex_hull(crescent.figure, tol);
    r.add(above("exterior_crescent hull area gain", 0.0, "computed: hull strictly larger",
                area(hull) - area(crescent.figure), 0.0));
    r.add(equal("exterior_crescent hull diameter", 1.0, "closed form: KL is a longest chord", diameter(hull, tol),
                1e-9));

    // Monte Carlo cross-checks
    const std::uint64_t n = opt.oracle_samples;
    r.add(within_sigma("oracle area mixed_triangle (4 sigma)", mixed_area, "oracle: Monte Carlo",
                       mc_area(mixed.figure, n, opt.oracle_seed, tol)));
    r.add(within_sigma("oracle mu mixed_triangle (4 sigma)", mu_bound, "oracle: Monte Carlo",
                       mc_mu(mixed.figure, ref, n, opt.oracle_seed + 1, tol)));
    r.add(within_sigma("oracle area reuleaux (4 sigma)", reuleaux_area, "oracle: Monte Carlo",
                       mc_area(rt.figure, n, opt.oracle_seed + 2, tol)));
    r.add(within_sigma("oracle mu isosceles(pi/3) (4 sigma)", equilateral_mu, "oracle: Monte Carlo",
                       mc_mu(equi.figure, ref, n, opt.oracle_seed + 3, tol)));

    // a short search never beats the mixed triangle
    OptConfig cfg;
    cfg.n_points = 16;
    cfg.iterations = 2'000;
    cfg.seed = 42;
    const OptTrace trace = optimize_mu(cfg, tol);
    r.add(at_most("optimizer best mu within bound", mu_bound, "closed form: mixed triangle is extremal",
                  trace.best_mu, 1e-6));

    const PerturbationReport audit = perturbation_audit(mixed.figure, tol);
    r.add(flag("outward bulge breaks a unit distance", true, "closed form: arcs lie on unit circles",
               audit.bulge_flagged));
    r.add(flag("strip below KL degrades", true, "closed form: lowers mu or breaks the diameter", audit.strip_flagged));
    return r;
}

json to_json(const Check& c) {
    json j;
    j["name"] = c.name;
    j["expected"] = {{"value", c.expected}, {"provenance", c.provenance}};
    j["relation"] = c.relation;
    j["computed"] = c.computed;
    j["abs_error"] = c.abs_error;
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    return j;
}

json to_json(const VerificationReport& r) {
    json checks = json::array();
    for (const Check& c : r.checks) checks.push_back(to_json(c));
    json j;
    j["checks"] = std::move(checks);
    j["overall"] = r.overall;
    return j;
}

json to_json(const MuReport& r) {
    json j;
    j["total_area"] = r.total_area;
    j["interior_area"] = r.interior_area;
    j["exterior_area"] = r.exterior_area;
    j["mu"] = r.mu;
    j["method"] = to_string(r.method);
    j["est_error"] = r.est_error;
    return j;
}

json to_json(const McEstimate& e) {
    json j;
    j["value"] = e.value;
    j["std_error"] = e.std_error;
    j["samples"] = e.samples;
    j["hits"] = e.hits;
    j["seed"] = e.seed;
    j["rng"] = Rng::kName;
    j["box"] = box_json(e.box);
    return j;
}

json to_json(const LittlewoodBound& b) {
    json j;
    j["area"] = b.area;
    j["bound"] = b.bound;
    j["max_chord_sq"] = b.max_chord_sq;
    j["tolerance"] = b.tolerance;
    j["ok"] = b.ok;
    return j;
}

json to_json(const LittlewoodCheck& c) {
    json j;
    j["status"] = to_string(c.status);
    j["area"] = c.area;
    j["diameter"] = c.diameter;
    j["bound"] = c.bound;
    return j;
}

json to_json(const OptTrace& t) {
    json upper = json::array();
    for (Point p : t.best_candidate.upper) upper.push_back(to_json(p));
    json lower = json::array();
    for (Point p : t.best_candidate.lower) lower.push_back(to_json(p));
    json history = json::array();
    for (const auto& [it, m] : t.history) history.push_back(json::array({it, m}));
    json j;
    j["best_mu"] = t.best_mu;
    j["best_restart"] = t.best_restart;
    j["candidate"] = {{"upper", std::move(upper)}, {"lower", std::move(lower)}};
    j["figure"] = to_json(t.best_figure);
    j["rejections"] = {{"below_axis", t.rejections.below_axis},
                       {"convexity", t.rejections.convexity},
                       {"diameter", t.rejections.diameter},
                       {"empty", t.rejections.empty}};
    j["history"] = std::move(history);
    return j;
}

json to_json(const PerturbationReport& r) {
    json bulges = json::array();
    for (const BulgeCheck& b : r.bulges) {
        bulges.push_back({{"edge", b.edge},
                          {"epsilon", b.epsilon},
                          {"moved", to_json(b.moved)},
                          {"dist_k", b.dist_k},
                          {"dist_l", b.dist_l},
                          {"violates", b.violates}});
    }
    json strips = json::array();
    for (const StripCheck& s : r.strips) {
        strips.push_back({{"kind", s.kind},
                          {"height", s.height},
                          {"mu_before", s.mu_before},
                          {"mu_after", s.mu_after},
                          {"diameter_after", s.diameter_after},
                          {"exact", s.exact},
                          {"mu_decreased", s.mu_decreased},
                          {"violates_diameter", s.violates_diameter}});
    }
    json j;
    j["bulges"] = std::move(bulges);
    j["strips"] = std::move(strips);
    j["bulge_flagged"] = r.bulge_flagged;
    j["strip_flagged"] = r.strip_flagged;
    return j;
}

std::string format_table(const VerificationReport& r) {
    std::string out;
    char line[512];
    std::snprintf(line, sizeof line, "%-4s  %-44s %2s %-20s %-20s %-10s %-10s\n", "", "check", "", "expected",
                  "computed", "abs_err", "tol");
    out += line;
    std::size_t passed = 0;
    for (const Check& c : r.checks) {
        if (c.pass) ++passed;
        std::snprintf(line, sizeof line, "%-4s  %-44s %2s %-20.15g %-20.15g %-10.3e %-10.3e\n",
                      c.pass ? "ok" : "FAIL", c.name.c_str(), c.relation.c_str(), c.expected, c.computed, c.abs_error,
                      c.tolerance);
        out += line;
    }
    std::snprintf(line, sizeof line, "%zu/%zu checks passed: %s\n", passed, r.checks.size(),
                  r.overall ? "PASS" : "FAIL");
    out += line;
    return out;
}

}  // namespace diamlab

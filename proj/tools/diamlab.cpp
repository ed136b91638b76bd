// diamlab: exterior fraction of unit-diameter figures against their
// diameter circle. Run `diamlab --help` for the subcommands.

#include "diamlab/io.hpp"
#include "diamlab/littlewood.hpp"
#include "diamlab/measures.hpp"
#include "diamlab/optimizer.hpp"
#include "diamlab/oracle.hpp"
#include "diamlab/report.hpp"
#include "diamlab/shapes.hpp"
#include "diamlab/svg.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

using namespace diamlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitIo = 4;

Circle parse_circle(const std::string& s) {
    std::istringstream in(s);
    double cx = 0.0, cy = 0.0, r = 0.0;
    char c1 = 0, c2 = 0;
    if (!(in >> cx >> c1 >> cy >> c2 >> r) || c1 != ',' || c2 != ',' || !(in >> std::ws).eof()) {
        throw CLI::ValidationError("--circle", "expected cx,cy,r");
    }
    return Circle({cx, cy}, r);
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exterior-fraction toolkit for figures of unit diameter"};
    app.require_subcommand(1);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the identity suite; exit status is the verdict");
    bool verify_json = false;
    VerifyOptions vopt;
    verify_cmd->add_flag("--json", verify_json, "print the report as JSON");
    verify_cmd->add_option("--area-tol", vopt.area_tol, "tolerance of the discretized-arc checks")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--oracle-samples", vopt.oracle_samples, "Monte Carlo samples per oracle check")
        ->check(CLI::Range(kMinOracleSamples, std::uint64_t{1} << 40));

    // shapes
    auto* shapes_cmd = app.add_subcommand("shapes", "list or emit library shapes");
    shapes_cmd->require_subcommand(1);
    auto* list_cmd = shapes_cmd->add_subcommand("list", "print the shape names");
    auto* emit_cmd = shapes_cmd->add_subcommand("emit", "print a shape as figure JSON");
    std::string emit_name;
    emit_cmd->add_option("name", emit_name, "shape name")->required();

    // mu
    auto* mu_cmd = app.add_subcommand("mu", "exterior fraction of a figure against a circle");
    std::string shape_arg;
    std::string circle_arg;
    mu_cmd->add_option("--shape", shape_arg, "library shape or figure JSON file")->required();
    mu_cmd->add_option("--circle", circle_arg, "cx,cy,r (default: the reference circle)");

    // littlewood
    auto* lw_cmd = app.add_subcommand("littlewood", "area <= (pi/4) max PQ^2 for a radial profile");
    std::string profile_path;
    lw_cmd->add_option("--profile", profile_path, "profile JSON {\"theta\": [...], \"rho\": [...]}")->required();

    // optimize
    auto* opt_cmd = app.add_subcommand("optimize", "seeded search for the largest exterior fraction");
    OptConfig cfg;
    std::string figure_out;
    opt_cmd->add_option("--points", cfg.n_points, "upper-chain points")->check(CLI::PositiveNumber);
    opt_cmd->add_option("--iters", cfg.iterations, "iterations per restart")->check(CLI::PositiveNumber);
    opt_cmd->add_option("--seed", cfg.seed, "random seed");
    opt_cmd->add_option("--restarts", cfg.restarts, "independent restarts")->check(CLI::PositiveNumber);
    opt_cmd->add_flag("--allow-lower", cfg.allow_lower, "also search a chain below KL");
    opt_cmd->add_option("--figure-out", figure_out, "write the best figure as JSON");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Monte Carlo area and exterior fraction");
    std::string oracle_shape;
    std::string oracle_circle;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 1;
    oracle_cmd->add_option("--shape", oracle_shape, "library shape or figure JSON file")->required();
    oracle_cmd->add_option("--circle", oracle_circle, "cx,cy,r (default: the reference circle)");
    oracle_cmd->add_option("--samples", samples, "sample count (>= 10^4)");
    oracle_cmd->add_option("--seed", seed, "random seed");

    // render
    auto* render_cmd = app.add_subcommand("render", "draw a figure as SVG");
    std::string render_name;
    std::string render_out;
    render_cmd->add_option("name", render_name, "library shape or figure JSON file")->required();
    render_cmd->add_option("--out", render_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        const Tolerance tol;
        if (*verify_cmd) {
            const VerificationReport r = verify(vopt);
            if (verify_json) {
                print(to_json(r));
            } else {
                std::cout << format_table(r);
            }
            return r.overall ? 0 : kExitFail;
        }
        if (*list_cmd) {
            for (const auto& s : library()) std::cout << s.name << '\n';
            return 0;
        }
        if (*emit_cmd) {
            print(to_json(resolve_shape(emit_name, tol).figure));
            return 0;
        }
        if (*mu_cmd) {
            const NamedShape s = resolve_shape(shape_arg, tol);
            const Circle c = circle_arg.empty() ? s.reference.value_or(reference_circle()) : parse_circle(circle_arg);
            print(to_json(mu(s.figure, c, tol)));
            return 0;
        }
        if (*lw_cmd) {
            const RadialProfile prof = profile_from_json(read_json(profile_path));
            const LittlewoodBound b = littlewood_bound(prof, tol);
            const RadialArea ra = radial_area(prof);
            json j = to_json(b);
            j["direct_area"] = ra.direct;
            j["paired_area"] = ra.paired;
            j["quad_error"] = ra.quad_error;
            print(j);
            return b.ok ? 0 : kExitFail;
        }
        if (*opt_cmd) {
            const OptTrace t = optimize_mu(cfg, tol);
            if (!figure_out.empty()) write_file(figure_out, to_json(t.best_figure).dump(2) + "\n");
            print(to_json(t));
            return 0;
        }
        if (*oracle_cmd) {
            const NamedShape s = resolve_shape(oracle_shape, tol);
            const Circle c =
                oracle_circle.empty() ? s.reference.value_or(reference_circle()) : parse_circle(oracle_circle);
            json j;
            j["area"] = to_json(mc_area(s.figure, samples, seed, tol));
            j["mu"] = to_json(mc_mu(s.figure, c, samples, seed + 1, tol));
            print(j);
            return 0;
        }
        if (*render_cmd) {
            write_file(render_out, render_svg(resolve_shape(render_name, tol), {}, tol));
            return 0;
        }
    } catch (const NotFound& e) {
        std::cerr << "not found: " << e.what() << '\n';
        return kExitNotFound;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

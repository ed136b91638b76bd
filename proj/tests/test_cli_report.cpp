#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diamlab/io.hpp"
#include "diamlab/report.hpp"
#include "diamlab/svg.hpp"
#include "support/process.hpp"

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <string>

using namespace diamlab;
namespace fs = std::filesystem;

namespace {

using process::Run;

Run run(const std::string& args) { return process::run(DIAMLAB_CLI, args); }

struct Scratch {
    fs::path dir = fs::temp_directory_path() / ("diamlab_cli_test_" + std::to_string(::getpid()));
    Scratch() { fs::create_directories(dir); }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
};

fs::path scratch() {
    static const Scratch s;
    return s.dir;
}

}  // namespace

TEST_CASE("figure json round trip") {
    for (const NamedShape& s : library()) {
        CAPTURE(s.name);
        const json j = to_json(s.figure);
        const Figure back = figure_from_json(json::parse(j.dump()));
        REQUIRE(back.size() == s.figure.size());
        for (std::size_t i = 0; i < back.size(); ++i) {
            CHECK(back[i].start == s.figure[i].start);
            CHECK(back[i].end == s.figure[i].end);
            CHECK(back[i].is_arc() == s.figure[i].is_arc());
            if (back[i].is_arc()) {
                CHECK(back[i].center == s.figure[i].center);
                CHECK(back[i].radius == s.figure[i].radius);
                CHECK(back[i].orientation == s.figure[i].orientation);
            }
        }
        CHECK(area(back) == area(s.figure));
        CHECK(to_json(back).dump() == j.dump());
    }
}

TEST_CASE("malformed figures") {
    CHECK_THROWS_AS(figure_from_json(json::parse(R"({"edges": 3})")), InvalidFigure);
    CHECK_THROWS_AS(figure_from_json(json::parse(R"({"nodes": []})")), InvalidFigure);
    CHECK_THROWS_AS(figure_from_json(json::parse(R"({"edges": [{"kind": "spline"}]})")), InvalidFigure);
    // open chain
    CHECK_THROWS_AS(figure_from_json(json::parse(
                        R"({"edges": [{"kind": "segment", "start": [0, 0], "end": [1, 0]},
                                      {"kind": "segment", "start": [1, 0], "end": [0, 1]}]})")),
                    InvalidFigure);
}

TEST_CASE("profile json") {
    const auto p = RadialProfile::sample([](double t) { return std::sin(t); }, 32);
    const RadialProfile back = profile_from_json(json::parse(to_json(p).dump()));
    CHECK(back.theta() == p.theta());
    CHECK(back.rho() == p.rho());
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"theta": [0, 1]})")), DomainError);
    CHECK_THROWS_AS(profile_from_json(json::parse(R"({"theta": [0, 1], "rho": [0, 1]})")), DomainError);
}

TEST_CASE("files and shape lookup") {
    const fs::path f = scratch() / "lens.json";
    write_file(f, to_json(lens().figure).dump(2));
    CHECK(std::abs(area(resolve_shape(f.string()).figure) - area(lens().figure)) < 1e-15);
    CHECK(resolve_shape("reuleaux").name == "reuleaux");
    CHECK_THROWS_AS(resolve_shape("no_such_shape"), NotFound);
    CHECK_THROWS_AS(read_file(scratch() / "missing.json"), IoError);
    CHECK_THROWS_AS(write_file("/nonexistent-dir/x.json", "{}"), IoError);
    write_file(scratch() / "bad.json", "{ not json");
    CHECK_THROWS_AS(read_json(scratch() / "bad.json"), IoError);
}

TEST_CASE("svg") {
    const std::string m = render_svg(mixed_triangle());
    CHECK(m.find("μ ≈ 0.3606") != std::string::npos);
    CHECK(m.find(">K</text>") != std::string::npos);
    CHECK(m.find(">L</text>") != std::string::npos);
    CHECK(m.find(">C</text>") != std::string::npos);
    CHECK(m.find(">D</text>") == std::string::npos);
    CHECK(m.find("clipPath") != std::string::npos);
    CHECK(m.find("stroke-dasharray") != std::string::npos);
    CHECK(m == render_svg(mixed_triangle()));

    const std::string x = render_svg(exterior_crescent());
    CHECK(x.find("μ ≈ 1.0000") != std::string::npos);
    const std::string r = render_svg(reuleaux());
    CHECK(r.find("<title>reuleaux</title>") != std::string::npos);
    CHECK(render_svg(lens()).find(">D</text>") != std::string::npos);
}

TEST_CASE("verification report") {
    const VerificationReport r = verify();
    CHECK(r.overall);
    CHECK(r.checks.size() >= 15);
    bool all = true;
    for (const Check& c : r.checks) {
        CAPTURE(c.name);
        CHECK(!c.provenance.empty());
        CHECK(c.pass);
        all = all && c.pass;
        if (c.relation == "=") CHECK(c.abs_error == std::abs(c.computed - c.expected));
    }
    CHECK(r.overall == all);

    const json j = to_json(r);
    CHECK(j["overall"] == true);
    CHECK(j["checks"].size() == r.checks.size());
    for (const char* key : {"name", "expected", "relation", "computed", "abs_error", "tolerance", "pass"}) {
        CHECK(j["checks"][0].contains(key));
    }
    CHECK(j["checks"][0]["expected"].contains("value"));
    CHECK(j["checks"][0]["expected"].contains("provenance"));
    // idempotent
    CHECK(to_json(verify()).dump() == j.dump());
    CHECK(format_table(r).find("PASS") != std::string::npos);
}

TEST_CASE("tight tolerance fails only the discretized checks") {
    VerifyOptions opt;
    opt.area_tol = 1e-15;
    const VerificationReport r = verify(opt);
    CHECK_FALSE(r.overall);
    int failed = 0;
    for (const Check& c : r.checks) {
        if (c.pass) continue;
        ++failed;
        CAPTURE(c.name);
        CHECK(c.tolerance == 1e-15);
    }
    CHECK(failed > 0);
    // and the closed-form headline values still pass
    int closed = 0;
    for (const Check& c : r.checks) {
        if (c.provenance.rfind("closed form", 0) == 0 && c.tolerance != 1e-15) {
            ++closed;
            CHECK(c.pass);
        }
    }
    CHECK(closed > 0);
}

TEST_CASE("cli exit codes") {
    CHECK(run("verify").status == 0);
    CHECK(run("verify --area-tol 1e-15").status == 1);
    CHECK(run("--no-such-flag").status == 2);
    CHECK(run("shapes emit dodecahedron").status == 3);
    CHECK(run("mu --shape dodecahedron").status == 3);
    CHECK(run("render mixed_triangle --out /nonexistent-dir/x.svg").status == 4);
    CHECK(run("littlewood --profile " + (scratch() / "missing.json").string()).status == 4);
}

TEST_CASE("cli subcommands") {
    const Run list = run("shapes list");
    CHECK(list.status == 0);
    for (const NamedShape& s : library()) CHECK(list.out.find(s.name) != std::string::npos);

    const Run emit = run("shapes emit reuleaux");
    REQUIRE(emit.status == 0);
    CHECK(std::abs(area(figure_from_json(json::parse(emit.out))) - closed_form::reuleaux_area) < 1e-12);

    const Run m = run("mu --shape mixed_triangle");
    REQUIRE(m.status == 0);
    CHECK(std::abs(json::parse(m.out)["mu"].get<double>() - closed_form::mu_bound) < 1e-9);
    const Run mc = run("mu --shape unit_circle --circle 0.5,0,0.5");
    REQUIRE(mc.status == 0);
    CHECK(json::parse(mc.out)["mu"].get<double>() > 0.3);

    const fs::path prof = scratch() / "profile.json";
    write_file(prof, to_json(RadialProfile::sample([](double t) { return std::sin(t); }, 4001)).dump());
    const Run lw = run("littlewood --profile " + prof.string());
    REQUIRE(lw.status == 0);
    const json lj = json::parse(lw.out);
    CHECK(lj["ok"] == true);
    CHECK(std::abs(lj["area"].get<double>() - std::numbers::pi / 4) < 1e-6);

    const fs::path fig = scratch() / "best.json";
    const Run opt = run("optimize --points 8 --iters 500 --seed 3 --figure-out " + fig.string());
    REQUIRE(opt.status == 0);
    const double best = json::parse(opt.out)["best_mu"].get<double>();
    const Run again = run("mu --shape " + fig.string());
    REQUIRE(again.status == 0);
    CHECK(std::abs(json::parse(again.out)["mu"].get<double>() - best) < 1e-12);

    const Run o = run("oracle --shape mixed_triangle --samples 100000 --seed 4");
    REQUIRE(o.status == 0);
    CHECK(json::parse(o.out)["area"]["samples"] == 100000);

    const fs::path svg = scratch() / "crescent.svg";
    REQUIRE(run("render exterior_crescent --out " + svg.string()).status == 0);
    CHECK(read_file(svg) == render_svg(exterior_crescent()));
}

TEST_CASE("cli output is reproducible") {
    for (const std::string args : {"verify --json", "optimize --points 6 --iters 300 --seed 9 --restarts 2",
                                   "oracle --shape reuleaux --samples 50000 --seed 1"}) {
        CAPTURE(args);
        const Run a = run(args);
        const Run b = run(args);
        CHECK(a.status == 0);
        CHECK(!a.out.empty());
        CHECK(a.out == b.out);
    }
    const fs::path s1 = scratch() / "a.svg";
    const fs::path s2 = scratch() / "b.svg";
    REQUIRE(run("render lens --out " + s1.string()).status == 0);
    REQUIRE(run("render lens --out " + s2.string()).status == 0);
    CHECK(read_file(s1) == read_file(s2));
}

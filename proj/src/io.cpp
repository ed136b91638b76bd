#include "diamlab/io.hpp"

#include <fstream>
#include <sstream>

namespace diamlab {

json to_json(Point p) { return json::array({p.x, p.y}); }

json to_json(const Edge& e) {
    json j;
    j["kind"] = e.is_arc() ? "arc" : "segment";
    j["start"] = to_json(e.start);
    j["end"] = to_json(e.end);
    if (e.is_arc()) {
        j["center"] = to_json(e.center);
        j["radius"] = e.radius;
        j["orientation"] = e.orientation == Orientation::ccw ? "ccw" : "cw";
        if (e.full_turn) j["full_turn"] = true;
    }
    return j;
}

json to_json(const Figure& f) {
    json edges = json::array();
    for (const Edge& e : f.edges()) edges.push_back(to_json(e));
    json j;
    j["edges"] = std::move(edges);
    return j;
}

json to_json(const RadialProfile& p) {
    json j;
    j["theta"] = p.theta();
    j["rho"] = p.rho();
    return j;
}

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InvalidFigure("a point must be a [x, y] pair of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

Edge edge_from_json(const json& j) {
    if (!j.is_object()) throw InvalidFigure("an edge must be a JSON object");
    const std::string kind = j.value("kind", "");
    const Point a = point_from_json(j.at("start"));
    const Point b = point_from_json(j.at("end"));
    if (kind == "segment") return Edge::segment(a, b);
    if (kind != "arc") throw InvalidFigure("edge kind must be \"segment\" or \"arc\"");

    const Point c = point_from_json(j.at("center"));
    const double r = j.at("radius").get<double>();
    const std::string o = j.value("orientation", "ccw");
    if (o != "ccw" && o != "cw") throw InvalidFigure("arc orientation must be \"ccw\" or \"cw\"");
    const Orientation orient = o == "ccw" ? Orientation::ccw : Orientation::cw;
    if (j.value("full_turn", false)) return Edge::circle(c, r, orient);
    return Edge::arc(a, b, c, r, orient);
}

Figure figure_from_json(const json& j, const Tolerance& tol) {
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array()) {
        throw InvalidFigure("figure JSON needs an \"edges\" array");
    }
    std::vector<Edge> edges;
    try {
        for (const json& e : j["edges"]) edges.push_back(edge_from_json(e));
    } catch (const json::exception& ex) {
        throw InvalidFigure(std::string("malformed edge: ") + ex.what());
    }
    return Figure(std::move(edges), tol);
}

RadialProfile profile_from_json(const json& j) {
    try {
        return RadialProfile(j.at("theta").get<std::vector<double>>(), j.at("rho").get<std::vector<double>>());
    } catch (const json::exception& ex) {
        throw DomainError(std::string("malformed profile: ") + ex.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

json read_json(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw IoError(path.string() + ": " + ex.what());
    }
}

NamedShape resolve_shape(const std::string& name_or_path, const Tolerance& tol) {
    try {
        return make_shape(name_or_path);
    } catch (const std::out_of_range&) {
    }
    std::error_code ec;
    if (!std::filesystem::is_regular_file(name_or_path, ec)) {
        throw NotFound("no shape or figure file named '" + name_or_path + "'");
    }
    const std::filesystem::path p(name_or_path);
    return {p.stem().string(), figure_from_json(read_json(p), tol), reference_circle(), {}};
}

}  // namespace diamlab

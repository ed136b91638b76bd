#pragma once

#include "diamlab/geometry.hpp"
#include "diamlab/littlewood.hpp"
#include "diamlab/shapes.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace diamlab {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Neither a library shape nor a readable figure file.
class NotFound : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

using json = nlohmann::ordered_json;

json to_json(Point p);
json to_json(const Edge& e);
json to_json(const Figure& f);
json to_json(const RadialProfile& p);

Point point_from_json(const json& j);
Edge edge_from_json(const json& j);
/// {"edges": [...]}; the result goes through full Figure validation.
Figure figure_from_json(const json& j, const Tolerance& tol = {});
/// {"theta": [...], "rho": [...]}
RadialProfile profile_from_json(const json& j);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);
json read_json(const std::filesystem::path& path);

/// A library shape by name, or else a figure JSON file (paired with the
/// reference circle). Throws NotFound when neither exists.
NamedShape resolve_shape(const std::string& name_or_path, const Tolerance& tol = {});

}  // namespace diamlab

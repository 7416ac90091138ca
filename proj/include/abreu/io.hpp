#pragma once

#include "abreu/grid_function.hpp"
#include "abreu/legendre.hpp"

#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

namespace abreu {

std::string format_double(double v);
nlohmann::json grid_json(const Grid& g);

// <dir>/<name>.csv (node, coordinates, value) and <dir>/<name>.json (grid metadata).
void write_field(const std::filesystem::path& dir, const std::string& name, const GridFunction& f);
std::vector<double> read_field_values(const std::filesystem::path& csv, std::size_t expected);
// Dual lattice values: node, x1[, x2], f, valid.
void write_dual_field(const std::filesystem::path& dir, const std::string& name, const LegendrePair& P,
                      const std::vector<double>& values);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace abreu

#include "abreu/io.hpp"

#include "abreu/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace abreu {

namespace {
constexpr const char* kModule = "cli_reporting";
}

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::json grid_json(const Grid& g)
{
    nlohmann::json j;
    j["dim"] = g.dim();
    j["h"] = g.h();
    j["origin"] = {g.origin().x(), g.origin().y()};
    j["shape"] = {g.shape()[0], g.shape()[1]};
    j["interior_nodes"] = g.size();
    j["boundary_nodes"] = g.boundary_nodes().size();
    j["domain"] = g.domain().to_json();
    return j;
}

void write_field(const std::filesystem::path& dir, const std::string& name, const GridFunction& f)
{
    std::filesystem::create_directories(dir);
    const Grid& g = f.grid();
    std::ofstream out(dir / (name + ".csv"));
    if (!out) throw Error(ErrorKind::Config, kModule, "cannot write " + (dir / (name + ".csv")).string());
    out << (g.dim() == 1 ? "node,xi1,value\n" : "node,xi1,xi2,value\n");
    for (std::size_t k = 0; k < f.size(); ++k) {
        const Point& p = g.position(k);
        out << k << ',' << format_double(p.x());
        if (g.dim() == 2) out << ',' << format_double(p.y());
        out << ',' << format_double(f[k]) << '\n';
    }
    nlohmann::json meta;
    meta["name"] = name;
    meta["grid"] = grid_json(g);
    meta["columns"] = g.dim() == 1 ? nlohmann::json{"node", "xi1", "value"} : nlohmann::json{"node", "xi1", "xi2", "value"};
    write_json(dir / (name + ".json"), meta);
}

std::vector<double> read_field_values(const std::filesystem::path& csv, std::size_t expected)
{
    std::ifstream in(csv);
    if (!in) throw Error(ErrorKind::Config, kModule, "cannot open " + csv.string());
    std::string line;
    std::getline(in, line);
    std::vector<double> v;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto pos = line.rfind(',');
        if (pos == std::string::npos) throw Error(ErrorKind::Config, kModule, "malformed row in " + csv.string());
        v.push_back(std::strtod(line.c_str() + pos + 1, nullptr));
    }
    if (v.size() != expected)
        throw Error(ErrorKind::Config, kModule, csv.string() + " has " + std::to_string(v.size()) + " rows, expected " + std::to_string(expected));
    return v;
}

void write_dual_field(const std::filesystem::path& dir, const std::string& name, const LegendrePair& P,
                      const std::vector<double>& values)
{
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / (name + ".csv"));
    if (!out) throw Error(ErrorKind::Config, kModule, "cannot write " + (dir / (name + ".csv")).string());
    const int n = P.dual.dim;
    out << (n == 1 ? "node,x1,value,valid\n" : "node,x1,x2,value,valid\n");
    for (std::size_t l = 0; l < P.dual.size(); ++l) {
        Point x = P.dual.node(l);
        out << l << ',' << format_double(x.x());
        if (n == 2) out << ',' << format_double(x.y());
        out << ',' << format_double(values[l]) << ',' << int(P.valid[l]) << '\n';
    }
    nlohmann::json meta;
    meta["name"] = name;
    meta["dual_grid"] = {{"dim", n}, {"h", P.dual.h}, {"origin", {P.dual.origin.x(), P.dual.origin.y()}}, {"shape", {P.dual.nx, P.dual.ny}}};
    meta["base"] = {P.base.x(), P.base.y()};
    write_json(dir / (name + ".json"), meta);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Config, kModule, "cannot write " + path.string());
    out << j.dump(2) << '\n';
}

nlohmann::json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Config, kModule, "cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Config, kModule, "malformed JSON in " + path.string() + ": " + e.what());
    }
}

}  // namespace abreu

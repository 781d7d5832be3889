#include "oppsim/wkt.hpp"

#include "oppsim/settings.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace oppsim {

namespace {

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw ConfigError("wkt line " + std::to_string(lineno) + ": " + what);
}

// Splits "x1 y1, x2 y2, ..." into coordinates. Rejects odd component counts
// and non-numeric tokens.
std::vector<Coord> parse_coords(const std::string& body, int lineno) {
    std::vector<Coord> coords;
    std::istringstream groups(body);
    std::string group;
    while (std::getline(groups, group, ',')) {
        std::istringstream nums(group);
        std::string xs, ys, extra;
        if (!(nums >> xs >> ys)) fail(lineno, "coordinate pair expected in '" + group + "'");
        if (nums >> extra) fail(lineno, "odd number of coordinate components in '" + group + "'");
        char* end = nullptr;
        const double x = std::strtod(xs.c_str(), &end);
        if (end != xs.c_str() + xs.size()) fail(lineno, "bad number '" + xs + "'");
        const double y = std::strtod(ys.c_str(), &end);
        if (end != ys.c_str() + ys.size()) fail(lineno, "bad number '" + ys + "'");
        if (!std::isfinite(x) || !std::isfinite(y)) fail(lineno, "non-finite coordinate");
        coords.push_back({x, y});
    }
    return coords;
}

} // namespace

std::vector<Geometry> parse_wkt(const std::string& text) {
    std::vector<Geometry> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t b = 0;
        while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
        if (b == line.size() || line[b] == '#') continue;

        const size_t open = line.find('(', b);
        const size_t close = line.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            fail(lineno, "expected 'KEYWORD (...)', got '" + line.substr(b) + "'");

        std::string keyword = line.substr(b, open - b);
        while (!keyword.empty() && std::isspace(static_cast<unsigned char>(keyword.back())))
            keyword.pop_back();
        for (auto& c : keyword) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));

        Geometry geo;
        geo.coords = parse_coords(line.substr(open + 1, close - open - 1), lineno);
        if (keyword == "POINT") {
            geo.kind = Geometry::Kind::Point;
            if (geo.coords.size() != 1) fail(lineno, "POINT must have exactly one coordinate");
        } else if (keyword == "LINESTRING") {
            geo.kind = Geometry::Kind::LineString;
            if (geo.coords.size() < 2) fail(lineno, "LINESTRING needs at least 2 coordinates");
        } else {
            fail(lineno, "unknown geometry keyword '" + keyword + "'");
        }
        out.push_back(std::move(geo));
    }
    return out;
}

std::vector<Geometry> parse_wkt_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open wkt file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_wkt(buf.str());
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace oppsim

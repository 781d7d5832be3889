#pragma once

#include <string>
#include <vector>

namespace oppsim {

struct Coord {
    double x = 0, y = 0;
    bool operator==(const Coord&) const = default;
};

// POINT or LINESTRING, one per non-comment line of a WKT file.
struct Geometry {
    enum class Kind { Point, LineString };
    Kind kind = Kind::Point;
    std::vector<Coord> coords; // 1 for Point, >= 2 for LineString
};

// Parses the WKT subset used by the bundled map and POI assets. '#' lines
// and blank lines are skipped; anything else that is not a well-formed
// POINT/LINESTRING (including stray junk like a lone '|') raises a parse
// error naming the line.
std::vector<Geometry> parse_wkt(const std::string& text);

std::vector<Geometry> parse_wkt_file(const std::string& path);

} // namespace oppsim

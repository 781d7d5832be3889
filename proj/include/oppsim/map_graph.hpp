#pragma once

#include "oppsim/wkt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oppsim {

// Undirected weighted graph built from WKT LINESTRINGs. Vertices are
// deduplicated by exact coordinate equality and keep insertion order, so
// paths sharing an intersection coordinate become traversable. Immutable
// after construction; concurrent read-only queries are safe.
class MapGraph {
public:
    struct Edge {
        int to = 0;
        double weight = 0; // Euclidean sim-m
    };

    static MapGraph build(const std::vector<Geometry>& geometries);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return edge_count_; }
    const Coord& vertex(int i) const { return vertices_[i]; }
    const std::vector<Edge>& neighbors(int i) const { return adjacency_[i]; }
    std::optional<int> find_vertex(const Coord& c) const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Bounding box over all vertices.
    Coord min_corner() const { return min_; }
    Coord max_corner() const { return max_; }

private:
    std::vector<Coord> vertices_;
    std::vector<std::vector<Edge>> adjacency_;
    std::vector<std::string> warnings_;
    int edge_count_ = 0;
    Coord min_{0, 0}, max_{0, 0};
};

struct PathResult {
    bool found = false;
    std::vector<int> vertices; // from..to inclusive when found
    double length = 0;         // sim-m
};

// Dijkstra with a binary heap; equal-cost ties prefer the lower vertex
// index so identical inputs always return the identical path.
PathResult shortest_path(const MapGraph& graph, int from, int to);

// Nearest vertex by Euclidean distance, ties to the lower index.
int snap_to_vertex(const Coord& point, const MapGraph& graph);

// POI coordinates snapped onto graph vertices.
struct PoiSet {
    std::vector<int> vertices;
};

PoiSet snap_pois(const std::vector<Geometry>& points, const MapGraph& graph);

double euclidean(const Coord& a, const Coord& b);

} // namespace oppsim

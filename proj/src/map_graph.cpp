#include "oppsim/map_graph.hpp"

#include "oppsim/settings.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace oppsim {

double euclidean(const Coord& a, const Coord& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

MapGraph MapGraph::build(const std::vector<Geometry>& geometries) {
    MapGraph g;
    std::map<std::pair<double, double>, int> index;
    std::set<std::pair<int, int>> seen_edges;

    auto intern = [&](const Coord& c) {
        auto [it, inserted] = index.try_emplace({c.x, c.y}, static_cast<int>(g.vertices_.size()));
        if (inserted) {
            g.vertices_.push_back(c);
            g.adjacency_.emplace_back();
        }
        return it->second;
    };

    for (const auto& geo : geometries) {
        if (geo.kind != Geometry::Kind::LineString) continue;
        for (size_t i = 0; i + 1 < geo.coords.size(); ++i) {
            const Coord& a = geo.coords[i];
            const Coord& b = geo.coords[i + 1];
            if (a == b) {
                g.warnings_.push_back("dropped zero-length segment at (" + std::to_string(a.x) +
                                      ", " + std::to_string(a.y) + ")");
                continue;
            }
            const int u = intern(a);
            const int v = intern(b);
            const auto key = std::minmax(u, v);
            if (!seen_edges.insert(key).second) continue;
            const double w = euclidean(a, b);
            g.adjacency_[u].push_back({v, w});
            g.adjacency_[v].push_back({u, w});
            ++g.edge_count_;
        }
    }
    for (auto& adj : g.adjacency_)
        std::sort(adj.begin(), adj.end(), [](const Edge& a, const Edge& b) { return a.to < b.to; });

    if (!g.vertices_.empty()) {
        g.min_ = g.max_ = g.vertices_.front();
        for (const auto& v : g.vertices_) {
            g.min_.x = std::min(g.min_.x, v.x);
            g.min_.y = std::min(g.min_.y, v.y);
            g.max_.x = std::max(g.max_.x, v.x);
            g.max_.y = std::max(g.max_.y, v.y);
        }
    }
    return g;
}

std::optional<int> MapGraph::find_vertex(const Coord& c) const {
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == c) return static_cast<int>(i);
    return std::nullopt;
}

PathResult shortest_path(const MapGraph& graph, int from, int to) {
    const int n = graph.vertex_count();
    if (from < 0 || from >= n || to < 0 || to >= n)
        throw ConfigError("shortest_path: vertex out of range");

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, kInf);
    std::vector<int> prev(n, -1);
    // (distance, vertex); lower index wins on equal distance.
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[from] = 0;
    heap.push({0, from});

    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d > dist[u]) continue;
        if (u == to) break;
        for (const auto& e : graph.neighbors(u)) {
            const double nd = d + e.weight;
            if (nd < dist[e.to] || (nd == dist[e.to] && prev[e.to] > u)) {
                dist[e.to] = nd;
                prev[e.to] = u;
                heap.push({nd, e.to});
            }
        }
    }

    PathResult result;
    if (dist[to] == kInf) return result;
    result.found = true;
    result.length = dist[to];
    for (int v = to; v != -1; v = prev[v]) result.vertices.push_back(v);
    std::reverse(result.vertices.begin(), result.vertices.end());
    return result;
}

int snap_to_vertex(const Coord& point, const MapGraph& graph) {
    if (graph.vertex_count() == 0) throw ConfigError("snap_to_vertex: empty graph");
    int best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int i = 0; i < graph.vertex_count(); ++i) {
        const Coord& v = graph.vertex(i);
        const double d2 = (v.x - point.x) * (v.x - point.x) + (v.y - point.y) * (v.y - point.y);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

PoiSet snap_pois(const std::vector<Geometry>& points, const MapGraph& graph) {
    PoiSet set;
    for (const auto& geo : points) {
        if (geo.kind != Geometry::Kind::Point) continue;
        set.vertices.push_back(snap_to_vertex(geo.coords.front(), graph));
    }
    return set;
}

} // namespace oppsim

#include "oppsim/mobility.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oppsim {

MovementState initial_placement(const GroupSpec& group, const MapGraph& graph, SmallRng rng) {
    MovementState s;
    s.kind = group.movement;
    s.rng = rng;
    if (group.movement == MovementKind::Stationary) {
        s.position = {group.node_x, group.node_y};
        return s;
    }
    if (graph.vertex_count() == 0)
        throw ConfigError("map-based group '" + group.group_id + "' requires a non-empty map");
    s.speed_min = group.speed_min;
    s.speed_max = group.speed_max;
    s.poi_prob = group.poi_prob;
    s.current_vertex = static_cast<int>(s.rng.uniform_index(graph.vertex_count()));
    s.position = graph.vertex(s.current_vertex);
    return s;
}

int choose_destination(MovementState& state, const PoiSet& pois, double poi_prob,
                       const MapGraph& graph) {
    int dest = state.current_vertex;
    for (int attempt = 0; attempt < 16; ++attempt) {
        const bool toward_poi = !pois.vertices.empty() && state.rng.next_double() < poi_prob;
        dest = toward_poi
                   ? pois.vertices[state.rng.uniform_index(pois.vertices.size())]
                   : static_cast<int>(state.rng.uniform_index(graph.vertex_count()));
        if (dest != state.current_vertex) break;
    }
    return dest;
}

namespace {

// Plans the next trip from the current vertex. Returns false when no
// usable trip exists (single vertex or unreachable draws).
bool plan_trip(MovementState& s, const MapGraph& graph, const PoiSet& pois) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        const int dest = choose_destination(s, pois, s.poi_prob, graph);
        if (dest == s.current_vertex) return false;
        PathResult path = shortest_path(graph, s.current_vertex, dest);
        if (!path.found) continue; // disconnected component; redraw
        s.path = std::move(path.vertices);
        s.path_leg = 0;
        s.segment_progress = 0;
        s.trip_speed = s.rng.uniform(s.speed_min, s.speed_max);
        return true;
    }
    return false;
}

} // namespace

void step(MovementState& s, const MapGraph& graph, const PoiSet& pois, double dt) {
    if (s.kind == MovementKind::Stationary) return;

    if (s.path.size() < 2 && !plan_trip(s, graph, pois)) return;

    // Time accounting rather than distance: leftover tick time carries
    // across trip boundaries where the speed changes.
    double time_left = dt;
    while (time_left > 1e-12) {
        const Coord& a = graph.vertex(s.path[s.path_leg]);
        const Coord& b = graph.vertex(s.path[s.path_leg + 1]);
        const double seg_len = euclidean(a, b);
        const double left_in_seg = seg_len - s.segment_progress;
        const double reach = s.trip_speed * time_left;
        if (reach < left_in_seg) {
            s.segment_progress += reach;
            const double t = s.segment_progress / seg_len;
            s.position = {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
            return;
        }
        time_left -= left_in_seg / s.trip_speed;
        ++s.path_leg;
        s.current_vertex = s.path[s.path_leg];
        s.segment_progress = 0;
        s.position = graph.vertex(s.current_vertex);
        if (s.path_leg + 1 >= s.path.size()) {
            // Arrived; immediately start the next trip at a fresh speed.
            s.path.clear();
            if (!plan_trip(s, graph, pois)) return;
        }
    }
}

void step_all_serial(std::vector<MovementState>& states, const MapGraph& graph,
                     const std::vector<const PoiSet*>& pois, double dt) {
    static const PoiSet kEmpty;
    for (size_t i = 0; i < states.size(); ++i)
        step(states[i], graph, pois[i] ? *pois[i] : kEmpty, dt);
}

void step_all_parallel(std::vector<MovementState>& states, const MapGraph& graph,
                       const std::vector<const PoiSet*>& pois, double dt) {
    static const PoiSet kEmpty;
#pragma omp parallel for schedule(static)
    for (size_t i = 0; i < states.size(); ++i)
        step(states[i], graph, pois[i] ? *pois[i] : kEmpty, dt);
}

} // namespace oppsim

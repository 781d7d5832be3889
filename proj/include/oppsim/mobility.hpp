#pragma once

#include "oppsim/map_graph.hpp"
#include "oppsim/rng.hpp"
#include "oppsim/scenario.hpp"

#include <vector>

namespace oppsim {

// Per-host movement state. Stationary hosts never change; map-based hosts
// walk shortest paths between successively chosen destinations, drawing a
// fresh trip speed per trip, with zero wait at destinations.
struct MovementState {
    MovementKind kind = MovementKind::Stationary;
    Coord position{0, 0};

    // Map-based fields:
    int current_vertex = -1;          // vertex at the last trip boundary crossed
    std::vector<int> path;            // active trip, path[path_leg] -> path[path_leg+1]
    size_t path_leg = 0;              // index of the segment being traversed
    double segment_progress = 0;      // sim-m into the current segment
    double trip_speed = 0;            // sim-m per sim-s, drawn per trip
    double speed_min = 0, speed_max = 0;
    double poi_prob = 0;
    SmallRng rng{0};
};

// Places one host. Stationary hosts sit exactly at the group's nodeLocation;
// map-based hosts start at a uniformly random graph vertex.
MovementState initial_placement(const GroupSpec& group, const MapGraph& graph, SmallRng rng);

// Draws the next trip destination: with probability poi_prob a uniformly
// random POI, otherwise a uniformly random vertex. Redraws when the result
// equals the current vertex (bounded retries, then accepted as-is).
int choose_destination(MovementState& state, const PoiSet& pois, double poi_prob,
                       const MapGraph& graph);

// Advances one host by dt sim-seconds, planning new trips as destinations
// are reached (wait time 0). Stationary hosts are returned unchanged.
void step(MovementState& state, const MapGraph& graph, const PoiSet& pois, double dt);

// Whole-population kernels. The parallel kernel must produce bit-identical
// states to the serial one; per-host rng streams make hosts independent.
void step_all_serial(std::vector<MovementState>& states, const MapGraph& graph,
                     const std::vector<const PoiSet*>& pois, double dt);
void step_all_parallel(std::vector<MovementState>& states, const MapGraph& graph,
                       const std::vector<const PoiSet*>& pois, double dt);

} // namespace oppsim

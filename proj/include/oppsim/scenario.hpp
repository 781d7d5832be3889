#pragma once

#include "oppsim/settings.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oppsim {

// A broadcast interface declaration. Two hosts can link up only when their
// (alias-resolved) interface names are equal.
struct InterfaceSpec {
    std::string name;          // resolved name, e.g. "VHFInterface"
    double transmit_range = 0; // sim-m
    double transmit_speed = 0; // bytes per sim-s

    bool operator==(const InterfaceSpec&) const = default;
};

enum class MovementKind { Stationary, ShortestPathMapBased };

enum class RouterKind { Epidemic, MaxProp };

struct GroupSpec {
    std::string group_id;      // host id prefix, e.g. "pcd", "s", "cgaf"
    int nrof_hosts = 0;
    MovementKind movement = MovementKind::Stationary;
    // Stationary only:
    double node_x = 0, node_y = 0;
    // Map-based only:
    double speed_min = 0, speed_max = 0; // sim-m / sim-s
    int poi_file_index = 0;              // 0 = none
    double poi_prob = 0;                 // 0..1
    double buffer_size = 0;              // bytes
    std::string interface_name;          // resolved InterfaceSpec name

    bool operator==(const GroupSpec&) const = default;
};

struct MessageGeneratorSpec {
    double interval_min = 25.0; // sim-s between creations
    double interval_max = 35.0;
    double size = 500000.0; // bytes
    std::vector<std::string> source_groups;
    std::vector<std::string> destination_groups;
    double response_size = 0; // 0 = no response requested
    std::string id_prefix = "M";

    bool operator==(const MessageGeneratorSpec&) const = default;
};

// Fully resolved world description.
struct Scenario {
    double sim_time_end = 0;      // sim-s
    double update_interval = 1.0; // sim-s
    uint64_t rng_seed = 1;
    RouterKind router = RouterKind::Epidemic;
    int maxprop_hop_threshold = 3;
    std::string map_path;                        // relative to the settings file
    std::vector<std::pair<int, std::string>> poi_paths; // (file index, path)
    std::vector<InterfaceSpec> interfaces;
    std::vector<GroupSpec> groups;
    MessageGeneratorSpec generator;

    const InterfaceSpec& interface_by_name(const std::string& name) const;
    int total_hosts() const;

    bool operator==(const Scenario&) const = default;
};

// Assembles and validates a Scenario from a parsed table. Interface aliases
// ("shipInterface.alias = VHFInterface") resolve before group validation.
Scenario build_scenario(const SettingsTable& table);

// Emits settings text that build_scenario(parse_settings(...)) maps back to
// an equal Scenario.
std::string serialize_scenario(const Scenario& scenario);

std::string router_name(RouterKind kind);

} // namespace oppsim

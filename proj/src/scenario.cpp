#include "oppsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace oppsim {

const InterfaceSpec& Scenario::interface_by_name(const std::string& name) const {
    for (const auto& i : interfaces)
        if (i.name == name) return i;
    throw ConfigError("unknown interface '" + name + "'");
}

int Scenario::total_hosts() const {
    int n = 0;
    for (const auto& g : groups) n += g.nrof_hosts;
    return n;
}

std::string router_name(RouterKind kind) {
    return kind == RouterKind::Epidemic ? "EpidemicRouter" : "MaxPropRouter";
}

namespace {

std::string group_key(int n, const std::string& suffix) {
    return "Group" + std::to_string(n) + "." + suffix;
}

// Follows X.alias = Y chains to the interface that carries the actual
// type/range/speed declarations.
std::string resolve_alias(const SettingsTable& table, std::string name) {
    for (int depth = 0; depth < 8; ++depth) {
        const auto* e = table.find(name + ".alias");
        if (!e) return name;
        name = e->value;
    }
    throw ConfigError("interface alias chain too deep at '" + name + "'");
}

InterfaceSpec load_interface(const SettingsTable& table, const std::string& name) {
    InterfaceSpec spec;
    spec.name = name;
    if (!table.has(name + ".type"))
        throw ConfigError("interface '" + name + "' referenced but '" + name + ".type' is not declared");
    const std::string type = table.get_string(name + ".type");
    if (type != "SimpleBroadcastInterface")
        throw ConfigError("key '" + name + ".type': unsupported interface type '" + type + "'");
    spec.transmit_speed = table.get_quantity(name + ".transmitSpeed");
    spec.transmit_range = table.get_quantity(name + ".transmitRange");
    if (spec.transmit_range <= 0)
        throw ConfigError("key '" + name + ".transmitRange': must be > 0");
    if (spec.transmit_speed <= 0)
        throw ConfigError("key '" + name + ".transmitSpeed': must be > 0");
    return spec;
}

} // namespace

Scenario build_scenario(const SettingsTable& table) {
    Scenario s;
    s.sim_time_end = table.get_number("Scenario.endTime");
    if (s.sim_time_end <= 0) throw ConfigError("key 'Scenario.endTime': must be > 0");
    s.update_interval = table.get_number_or("Scenario.updateInterval", 1.0);
    if (s.update_interval <= 0) throw ConfigError("key 'Scenario.updateInterval': must be > 0");
    const double seed = table.get_number_or("MovementModel.rngSeed", 1.0);
    s.rng_seed = static_cast<uint64_t>(seed);

    const std::string router = table.get_string_or("Group.router", "EpidemicRouter");
    if (router == "EpidemicRouter") s.router = RouterKind::Epidemic;
    else if (router == "MaxPropRouter") s.router = RouterKind::MaxProp;
    else throw ConfigError("key 'Group.router': unknown router '" + router + "'");
    s.maxprop_hop_threshold = static_cast<int>(table.get_number_or("MaxPropRouter.hopThreshold", 3.0));
    if (s.maxprop_hop_threshold < 0)
        throw ConfigError("key 'MaxPropRouter.hopThreshold': must be >= 0");

    s.map_path = table.get_string_or("MapBasedMovement.mapFile1", "");

    // POI files, in declared index order.
    for (const auto& e : table.entries()) {
        const std::string prefix = "PointsOfInterest.poiFile";
        if (e.key.rfind(prefix, 0) == 0) {
            const int idx = std::stoi(e.key.substr(prefix.size()));
            s.poi_paths.emplace_back(idx, e.value);
        }
    }
    std::sort(s.poi_paths.begin(), s.poi_paths.end());

    const int nrof_groups = static_cast<int>(table.get_number("Scenario.nrofHostGroups"));
    if (nrof_groups < 1) throw ConfigError("key 'Scenario.nrofHostGroups': must be >= 1");

    std::set<std::string> iface_names;
    bool any_map_based = false;
    for (int n = 1; n <= nrof_groups; ++n) {
        GroupSpec g;
        g.group_id = table.get_string(group_key(n, "groupID"));
        g.nrof_hosts = static_cast<int>(table.get_number_or(group_key(n, "nrofHosts"), 1.0));
        if (g.nrof_hosts < 1)
            throw ConfigError("key '" + group_key(n, "nrofHosts") + "': must be >= 1");

        const std::string model = table.get_string(group_key(n, "movementModel"));
        if (model == "StationaryMovement") {
            g.movement = MovementKind::Stationary;
            if (!table.has(group_key(n, "nodeLocation")))
                throw ConfigError("key '" + group_key(n, "nodeLocation") +
                                  "': required for StationaryMovement");
            auto [x, y] = table.get_pair(group_key(n, "nodeLocation"));
            g.node_x = x;
            g.node_y = y;
        } else if (model == "ShortestPathMapBasedMovement") {
            g.movement = MovementKind::ShortestPathMapBased;
            any_map_based = true;
            auto [lo, hi] = table.get_pair(group_key(n, "speed"));
            g.speed_min = lo;
            g.speed_max = hi;
            if (g.speed_min > g.speed_max || g.speed_min < 0)
                throw ConfigError("key '" + group_key(n, "speed") + "': invalid range");
            if (table.has(group_key(n, "pois"))) {
                auto [idx, prob] = table.get_pair(group_key(n, "pois"));
                g.poi_file_index = static_cast<int>(idx);
                g.poi_prob = prob;
                if (g.poi_prob < 0 || g.poi_prob > 1)
                    throw ConfigError("key '" + group_key(n, "pois") + "': probability outside [0,1]");
                const bool declared = std::any_of(
                    s.poi_paths.begin(), s.poi_paths.end(),
                    [&](const auto& p) { return p.first == g.poi_file_index; });
                if (!declared)
                    throw ConfigError("key '" + group_key(n, "pois") + "': poiFile" +
                                      std::to_string(g.poi_file_index) + " is not declared");
            }
        } else if (model == "RandomWaypoint") {
            throw ConfigError("key '" + group_key(n, "movementModel") +
                              "': unsupported model 'RandomWaypoint'");
        } else {
            throw ConfigError("key '" + group_key(n, "movementModel") + "': unknown model '" +
                              model + "'");
        }

        g.buffer_size = table.get_quantity(group_key(n, "bufferSize"));
        if (g.buffer_size <= 0)
            throw ConfigError("key '" + group_key(n, "bufferSize") + "': must be > 0");

        if (table.has(group_key(n, "nrofInterfaces")) &&
            static_cast<int>(table.get_number(group_key(n, "nrofInterfaces"))) != 1)
            throw ConfigError("key '" + group_key(n, "nrofInterfaces") +
                              "': only single-interface hosts are supported");
        const std::string raw_iface = table.get_string(group_key(n, "interface1"));
        g.interface_name = resolve_alias(table, raw_iface);
        iface_names.insert(g.interface_name);
        s.groups.push_back(std::move(g));
    }

    for (const auto& name : iface_names)
        s.interfaces.push_back(load_interface(table, name));

    if (any_map_based && s.map_path.empty())
        throw ConfigError("missing required key 'MapBasedMovement.mapFile1' (map-based groups exist)");

    // Message generator. Defaults: interval [25,35], 500 kB, sources = first
    // group, destinations = every "cg*" group.
    MessageGeneratorSpec gen;
    if (table.has("Events1.interval")) {
        auto [lo, hi] = table.get_pair("Events1.interval");
        gen.interval_min = lo;
        gen.interval_max = hi;
    }
    if (gen.interval_min > gen.interval_max || gen.interval_min <= 0)
        throw ConfigError("key 'Events1.interval': invalid range");
    gen.size = table.get_quantity_or("Events1.size", gen.size);
    if (gen.size <= 0) throw ConfigError("key 'Events1.size': must be > 0");
    gen.response_size = table.get_quantity_or("Events1.responseSize", 0.0);
    gen.id_prefix = table.get_string_or("Events1.prefix", "M");
    if (table.has("Events1.fromGroups")) {
        gen.source_groups = table.get_list("Events1.fromGroups");
    } else {
        gen.source_groups = {s.groups.front().group_id};
    }
    if (table.has("Events1.toGroups")) {
        gen.destination_groups = table.get_list("Events1.toGroups");
    } else {
        for (const auto& g : s.groups)
            if (g.group_id.rfind("cg", 0) == 0 &&
                std::find(gen.destination_groups.begin(), gen.destination_groups.end(),
                          g.group_id) == gen.destination_groups.end())
                gen.destination_groups.push_back(g.group_id);
    }
    auto known_group = [&](const std::string& id) {
        return std::any_of(s.groups.begin(), s.groups.end(),
                           [&](const GroupSpec& g) { return g.group_id == id; });
    };
    for (const auto& id : gen.source_groups)
        if (!known_group(id))
            throw ConfigError("key 'Events1.fromGroups': unknown group '" + id + "'");
    for (const auto& id : gen.destination_groups)
        if (!known_group(id))
            throw ConfigError("key 'Events1.toGroups': unknown group '" + id + "'");
    if (gen.source_groups.empty() || gen.destination_groups.empty())
        throw ConfigError("Events1: source and destination group sets must be non-empty");
    for (const auto& src : gen.source_groups)
        if (std::find(gen.destination_groups.begin(), gen.destination_groups.end(), src) !=
            gen.destination_groups.end())
            throw ConfigError("Events1: source and destination group sets must be disjoint ('" +
                              src + "' appears in both)");
    s.generator = std::move(gen);
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    std::ostringstream out;
    auto num = [](double v) {
        std::ostringstream o;
        o.precision(17);
        o << v;
        return o.str();
    };
    out << "Scenario.endTime = " << num(s.sim_time_end) << "\n";
    out << "Scenario.updateInterval = " << num(s.update_interval) << "\n";
    out << "Scenario.nrofHostGroups = " << s.groups.size() << "\n";
    out << "MovementModel.rngSeed = " << s.rng_seed << "\n";
    out << "Group.router = " << router_name(s.router) << "\n";
    out << "MaxPropRouter.hopThreshold = " << s.maxprop_hop_threshold << "\n";
    if (!s.map_path.empty()) out << "MapBasedMovement.mapFile1 = " << s.map_path << "\n";
    for (const auto& [idx, path] : s.poi_paths)
        out << "PointsOfInterest.poiFile" << idx << " = " << path << "\n";
    for (size_t i = 0; i < s.groups.size(); ++i) {
        const GroupSpec& g = s.groups[i];
        const std::string p = "Group" + std::to_string(i + 1) + ".";
        out << p << "groupID = " << g.group_id << "\n";
        out << p << "nrofHosts = " << g.nrof_hosts << "\n";
        if (g.movement == MovementKind::Stationary) {
            out << p << "movementModel = StationaryMovement\n";
            out << p << "nodeLocation = " << num(g.node_x) << ", " << num(g.node_y) << "\n";
        } else {
            out << p << "movementModel = ShortestPathMapBasedMovement\n";
            out << p << "speed = " << num(g.speed_min) << ", " << num(g.speed_max) << "\n";
            if (g.poi_file_index != 0)
                out << p << "pois = " << g.poi_file_index << ", " << num(g.poi_prob) << "\n";
        }
        out << p << "bufferSize = " << num(g.buffer_size) << "\n";
        out << p << "nrofInterfaces = 1\n";
        out << p << "interface1 = " << g.interface_name << "\n";
    }
    for (const auto& i : s.interfaces) {
        out << i.name << ".type = SimpleBroadcastInterface\n";
        out << i.name << ".transmitSpeed = " << num(i.transmit_speed) << "\n";
        out << i.name << ".transmitRange = " << num(i.transmit_range) << "\n";
    }
    const MessageGeneratorSpec& g = s.generator;
    out << "Events1.interval = " << num(g.interval_min) << ", " << num(g.interval_max) << "\n";
    out << "Events1.size = " << num(g.size) << "\n";
    out << "Events1.responseSize = " << num(g.response_size) << "\n";
    out << "Events1.prefix = " << g.id_prefix << "\n";
    out << "Events1.fromGroups = ";
    for (size_t i = 0; i < g.source_groups.size(); ++i)
        out << (i ? ", " : "") << g.source_groups[i];
    out << "\n";
    out << "Events1.toGroups = ";
    for (size_t i = 0; i < g.destination_groups.size(); ++i)
        out << (i ? ", " : "") << g.destination_groups[i];
    out << "\n";
    return out.str();
}

} // namespace oppsim

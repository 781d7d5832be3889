#pragma once

#include <stdexcept>

namespace oppsim {

// World scaling: 1 sim-meter = 100 real meters, 1 sim-second = 60 real seconds.
inline constexpr double kDistanceScale = 100.0;
inline constexpr double kTimeScale = 60.0;

enum class UnitKind { Distance, Speed };

// Converts a real-world quantity into sim units. Distances (real meters)
// divide by the distance scale; speeds (real m/s) additionally pick up the
// time scale, so 28 km/h ~= 7.78 m/s -> 4.67 sim-m/sim-s.
inline double real_to_sim(double value, UnitKind kind) {
    if (value < 0) throw std::domain_error("real_to_sim: negative value");
    switch (kind) {
    case UnitKind::Distance: return value / kDistanceScale;
    case UnitKind::Speed: return value / kDistanceScale * kTimeScale;
    }
    throw std::domain_error("real_to_sim: unknown kind");
}

} // namespace oppsim

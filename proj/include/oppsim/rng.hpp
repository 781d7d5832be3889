#pragma once

#include <cstdint>

namespace oppsim {

// Deterministic, platform-independent PRNG (splitmix64). Every stochastic
// component owns its own stream so results never depend on call interleaving
// or on std::<random> distribution internals.
class SmallRng {
public:
    explicit SmallRng(uint64_t seed) : state_(seed) {}

    // Derive an independent stream from (seed, salt...). Mixing through the
    // generator itself keeps nearby seeds decorrelated.
    static SmallRng derive(uint64_t seed, uint64_t salt_a, uint64_t salt_b = 0) {
        SmallRng mix(seed ^ 0x9e3779b97f4a7c15ull);
        mix.state_ ^= mix.next_u64() + salt_a;
        mix.state_ ^= mix.next_u64() + (salt_b * 0xbf58476d1ce4e5b9ull);
        mix.next_u64();
        return mix;
    }

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

    // Uniform index in [0, n). n must be > 0.
    uint64_t uniform_index(uint64_t n) {
        return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

private:
    uint64_t state_;
};

} // namespace oppsim

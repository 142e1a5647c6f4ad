#pragma once

#include <cstdint>
#include <string_view>

// Splittable counter-based generator: each (seed, identity, point index)
// tuple owns an independent stream, so sampling is deterministic regardless
// of evaluation order or worker count.

namespace hypersum::rng {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char ch : s) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Stream {
public:
    Stream(uint64_t seed, std::string_view key, uint64_t index) {
        state_ = seed;
        (void)splitmix64(state_);
        state_ ^= fnv1a(key);
        (void)splitmix64(state_);
        state_ ^= index * 0xd1342543de82ef95ULL;
        (void)splitmix64(state_);
    }

    uint64_t next_u64() { return splitmix64(state_); }

    // uniform in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

private:
    uint64_t state_;
};

}  // namespace hypersum::rng

#pragma once

#include <cmath>
#include <cstdint>

namespace qembed {

/// splitmix64-based generator. Implementation-defined library distributions
/// are avoided so sampled values are identical across platforms; per-sample
/// streams are derived from (seed, index) so results do not depend on
/// evaluation order.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : state_(seed) {}

    static SampleRng for_sample(uint64_t seed, uint64_t index) {
        SampleRng mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
        mix.next_u64();
        return mix;
    }

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// standard normal via Box-Muller
    double gaussian() {
        double u1 = 1.0 - uniform(); // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

private:
    uint64_t state_;
};

} // namespace qembed

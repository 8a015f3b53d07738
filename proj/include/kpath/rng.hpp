#pragma once

#include <cstdint>
#include <random>

namespace kpath {

// Seeded generator with a pinned output stream. std::mt19937_64 is fully
// specified by the standard, but the std distributions are not, so bounded
// sampling and the double conversion are implemented here. Given the same
// seed, every platform produces the same draw sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform draw in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 bits of precision.
    double uniform_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace kpath

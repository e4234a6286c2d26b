#pragma once

#include <cstdint>
#include <random>

namespace pbf {

/// Deterministic uniform draws. mt19937_64 is the one stdlib engine whose
/// output stream is pinned by the standard; rejection sampling instead of
/// std::uniform_int_distribution keeps results identical across library
/// implementations.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    /// Uniform in [0, bound); bound must be >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t reject_under = (-bound) % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x < reject_under);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace pbf

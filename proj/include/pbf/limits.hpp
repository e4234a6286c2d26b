#pragma once

#include <cstddef>

namespace pbf {

/// Size caps for the dense and enumerative code paths.
struct Limits {
    /// Max n for 2^n tables of exact rationals.
    int dense_exact_cap = 16;
    /// Max n for 2^n tables of doubles (norm computations).
    int dense_float_cap = 24;
    /// Max entries in a sparse XOR-convolution intermediate before the
    /// computation falls back to the dense table path.
    std::size_t sparse_map_cap = std::size_t{1} << 20;
    /// Max n for full assignment enumeration in the equation-system solver.
    int bruteforce_cap = 24;
};

} // namespace pbf

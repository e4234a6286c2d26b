#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pbf/bounds.hpp"
#include "pbf/draw.hpp"
#include "pbf/maxlin.hpp"

namespace pbf::testing {

inline FourierExpansion fn(int n, std::vector<FourierExpansion::Term> terms) {
    return FourierExpansion(n, terms);
}

/// The running example f = 2 x1 x2 - 3 x2 x3 + x4.
inline FourierExpansion running_example() {
    return fn(4, {{VarSet::of({1, 2}), Rational(2)},
                  {VarSet::of({2, 3}), Rational(-3)},
                  {VarSet::of({4}), Rational(1)}});
}

/// x1 x2 = 1, x2 x3 = -1, x1 x3 = 1, unit weights.
inline EquationSystem system_a(long long k = 1) {
    return EquationSystem(3, {{VarSet::of({1, 2}), 1, 1},
                              {VarSet::of({2, 3}), -1, 1},
                              {VarSet::of({1, 3}), 1, 1}},
                          k);
}

/// Same shape generator as `pbf verify`: n in 1..nmax, m in 1..min(mmax,2^n).
inline FourierExpansion random_shape_function(Draw& draw, int nmax, int mmax,
                                              long long range = 10) {
    const int n = 1 + static_cast<int>(draw.below(nmax));
    const std::uint64_t universe = std::uint64_t{1} << n;
    const std::uint64_t m_cap =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(mmax), universe);
    const int m = 1 + static_cast<int>(draw.below(m_cap));
    return random_function(n, m, range, draw.raw());
}

/// Random valid system: distinct nonempty left-hand sides, weights 1..wmax,
/// k in 0..kmax.
inline EquationSystem random_system(Draw& draw, int nmax, int mmax, long long wmax,
                                    long long kmax) {
    const int n = 1 + static_cast<int>(draw.below(nmax));
    const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;
    const int m = 1 + static_cast<int>(
                          draw.below(std::min<std::uint64_t>(
                              static_cast<std::uint64_t>(mmax), nonempty)));
    std::vector<std::uint64_t> pool(nonempty);
    std::iota(pool.begin(), pool.end(), std::uint64_t{1});
    std::vector<Equation> equations;
    equations.reserve(m);
    for (int i = 0; i < m; ++i) {
        const std::size_t j = i + draw.below(nonempty - i);
        std::swap(pool[i], pool[j]);
        Equation eq;
        eq.lhs = VarSet::from_bits(pool[i]);
        eq.rhs = draw.below(2) == 0 ? 1 : -1;
        eq.weight = 1 + static_cast<long long>(draw.below(wmax));
        equations.push_back(eq);
    }
    const long long k = static_cast<long long>(draw.below(kmax + 1));
    return EquationSystem(n, std::move(equations), k);
}

} // namespace pbf::testing

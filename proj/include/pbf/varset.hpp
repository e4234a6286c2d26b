#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>

#include "pbf/errors.hpp"

namespace pbf {

/// Set of 1-based variable indices packed into a 64-bit mask: bit i-1 is set
/// iff variable i is in the set. Indices run 1..63; the empty set is the
/// constant character (identically 1).
class VarSet {
public:
    static constexpr int max_index = 63;

    constexpr VarSet() = default;

    static constexpr VarSet from_bits(std::uint64_t bits) { return VarSet(bits); }

    static VarSet of(std::initializer_list<int> indices) {
        VarSet s;
        for (int i : indices) s = s.with(i);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool contains(int index) const {
        return index >= 1 && index <= max_index && (bits_ >> (index - 1)) & 1u;
    }

    VarSet with(int index) const {
        if (index < 1 || index > max_index)
            throw Error(Errc::mask_out_of_range,
                        "variable index " + std::to_string(index) + " outside 1.." +
                            std::to_string(max_index));
        return VarSet(bits_ | (std::uint64_t{1} << (index - 1)));
    }

    /// True when every index is <= n.
    constexpr bool within(int n) const {
        if (n >= max_index) return true;
        if (n < 0) return bits_ == 0;
        return (bits_ >> n) == 0;
    }

    /// Largest index in the set, 0 when empty.
    constexpr int highest() const {
        return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_);
    }

    /// Symmetric difference; characters multiply like chi_A * chi_B = chi_{A ^ B}.
    friend constexpr VarSet operator^(VarSet a, VarSet b) { return VarSet(a.bits_ ^ b.bits_); }

    friend constexpr auto operator<=>(VarSet a, VarSet b) = default;

private:
    explicit constexpr VarSet(std::uint64_t bits) : bits_(bits) {}

    std::uint64_t bits_ = 0;
};

} // namespace pbf

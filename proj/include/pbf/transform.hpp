#pragma once

#include <vector>

#include "pbf/expansion.hpp"
#include "pbf/limits.hpp"

namespace pbf {

/// Unnormalized Walsh-Hadamard transform, in place:
/// out[j] = sum_i (-1)^{popcount(i & j)} in[i]. Applying it twice scales by
/// the length. Length must be a power of two.
void wht_in_place(std::vector<Rational>& values);
void wht_in_place(std::vector<double>& values);

std::vector<Rational> wht(std::vector<Rational> values);

/// Dense evaluation at every cube point via one transform of the scattered
/// coefficient vector. Errors when n exceeds limits.dense_exact_cap.
TruthTable expansion_to_table(const FourierExpansion& f, const Limits& limits = {});

/// Inverse of expansion_to_table: transform, scale by 2^-n, drop exact zeros.
FourierExpansion table_to_expansion(const TruthTable& table);

/// Double-precision table for norm computations, capped by dense_float_cap.
std::vector<double> dense_values(const FourierExpansion& f, const Limits& limits = {});

/// Largest term cardinality, 0 for the empty expansion.
int degree(const FourierExpansion& f);

/// rho_i = number of terms containing variable i; width = max rho_i.
struct WidthProfile {
    std::vector<int> per_variable;
    int width = 0;
};

WidthProfile width(const FourierExpansion& f);

} // namespace pbf

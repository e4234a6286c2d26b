#include "pbf/transform.hpp"

#include <algorithm>
#include <bit>

namespace pbf {

namespace {

template <typename T>
void butterfly(std::vector<T>& v) {
    std::size_t size = v.size();
    if (size == 0 || (size & (size - 1)) != 0)
        throw Error(Errc::bad_length, "transform length must be a power of two");
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t block = 0; block < size; block += half << 1) {
            for (std::size_t i = block; i < block + half; ++i) {
                T low = v[i];
                T high = v[i + half];
                v[i] = low + high;
                v[i + half] = low - high;
            }
        }
    }
}

} // namespace

void wht_in_place(std::vector<Rational>& values) { butterfly(values); }
void wht_in_place(std::vector<double>& values) { butterfly(values); }

std::vector<Rational> wht(std::vector<Rational> values) {
    wht_in_place(values);
    return values;
}

TruthTable expansion_to_table(const FourierExpansion& f, const Limits& limits) {
    if (f.var_count() > limits.dense_exact_cap)
        throw Error(Errc::too_many_variables,
                    "n = " + std::to_string(f.var_count()) + " exceeds the dense cap " +
                        std::to_string(limits.dense_exact_cap));
    std::vector<Rational> values(std::size_t{1} << f.var_count());
    for (const auto& [mask, coefficient] : f.terms())
        values[mask.bits()] = coefficient;
    wht_in_place(values);
    return TruthTable(f.var_count(), std::move(values));
}

FourierExpansion table_to_expansion(const TruthTable& table) {
    std::vector<Rational> spectrum = table.values();
    wht_in_place(spectrum);
    const Rational scale(1, std::size_t{1} << table.var_count());
    std::vector<FourierExpansion::Term> terms;
    for (std::size_t mask = 0; mask < spectrum.size(); ++mask) {
        if (spectrum[mask].is_zero()) continue;
        terms.emplace_back(VarSet::from_bits(mask), spectrum[mask] * scale);
    }
    return FourierExpansion(table.var_count(), terms);
}

std::vector<double> dense_values(const FourierExpansion& f, const Limits& limits) {
    if (f.var_count() > limits.dense_float_cap)
        throw Error(Errc::too_many_variables,
                    "n = " + std::to_string(f.var_count()) + " exceeds the dense float cap " +
                        std::to_string(limits.dense_float_cap));
    std::vector<double> values(std::size_t{1} << f.var_count(), 0.0);
    for (const auto& [mask, coefficient] : f.terms())
        values[mask.bits()] = coefficient.to_double();
    wht_in_place(values);
    return values;
}

int degree(const FourierExpansion& f) {
    int d = 0;
    for (const auto& [mask, coefficient] : f.terms())
        d = std::max(d, mask.size());
    return d;
}

WidthProfile width(const FourierExpansion& f) {
    WidthProfile profile;
    profile.per_variable.assign(f.var_count(), 0);
    for (const auto& [mask, coefficient] : f.terms()) {
        std::uint64_t bits = mask.bits();
        while (bits) {
            int i = std::countr_zero(bits);
            ++profile.per_variable[i];
            bits &= bits - 1;
        }
    }
    for (int count : profile.per_variable)
        profile.width = std::max(profile.width, count);
    return profile;
}

} // namespace pbf

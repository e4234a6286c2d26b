#include "pbf/moments.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "pbf/transform.hpp"

namespace pbf {

namespace {

using CoeffMap = std::unordered_map<std::uint64_t, Rational>;

CoeffMap to_map(const FourierExpansion& f) {
    CoeffMap map;
    map.reserve(f.terms().size());
    for (const auto& [mask, coefficient] : f.terms())
        map.emplace(mask.bits(), coefficient);
    return map;
}

// XOR convolution: result[a ^ b] += lhs[a] * rhs[b]; exact zeros are dropped.
// Returns false instead of a result once the map exceeds cap.
bool convolve(const CoeffMap& lhs, const CoeffMap& rhs, std::size_t cap, CoeffMap& out) {
    out.clear();
    out.reserve(std::min(cap, lhs.size() * rhs.size()));
    for (const auto& [a, va] : lhs) {
        for (const auto& [b, vb] : rhs) {
            Rational& slot = out[a ^ b];
            slot += va * vb;
            if (out.size() > cap) return false;
        }
    }
    std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
    return true;
}

Rational sum_of_squares(const CoeffMap& map) {
    Rational sum;
    for (const auto& [mask, coefficient] : map)
        sum += coefficient * coefficient;
    return sum;
}

// Work estimates used to pick between the sparse convolution and the dense
// table; both paths produce the identical exact value.
double sparse_cost_estimate(const FourierExpansion& f, int r) {
    const double m = static_cast<double>(f.term_count());
    const double universe =
        f.var_count() < 60 ? std::ldexp(1.0, f.var_count()) : 1e18;
    double size = m;
    double cost = 0.0;
    for (int step = 1; step < r; ++step) {
        cost += size * m;
        size = std::min(size * m, universe);
    }
    return cost + size;
}

double dense_cost_estimate(const FourierExpansion& f, int r) {
    return std::ldexp(1.0, f.var_count()) * (f.var_count() + 2.0 * r);
}

} // namespace

Rational second_moment(const FourierExpansion& f) {
    Rational sum;
    for (const auto& [mask, coefficient] : f.terms())
        sum += coefficient * coefficient;
    return sum;
}

Rational even_moment(const FourierExpansion& f, int r, const Limits& limits) {
    if (r < 1)
        throw Error(Errc::bad_args, "moment order r must be >= 1");
    if (r == 1) return second_moment(f);
    if (f.term_count() == 0) return Rational(0);

    const bool dense_admissible = f.var_count() <= limits.dense_exact_cap;
    if (dense_admissible && dense_cost_estimate(f, r) < sparse_cost_estimate(f, r))
        return even_moment_oracle(f, r, limits);

    // Coefficients of f^r by repeated convolution; E[f^{2r}] is then the sum
    // of their squares (Parseval applied to f^r).
    CoeffMap base = to_map(f);
    CoeffMap power = base;
    CoeffMap next;
    for (int step = 1; step < r; ++step) {
        if (!convolve(power, base, limits.sparse_map_cap, next)) {
            if (!dense_admissible)
                throw Error(Errc::too_many_variables,
                            "sparse moment exceeded the map cap and n is over the dense cap");
            return even_moment_oracle(f, r, limits);
        }
        power.swap(next);
    }
    return sum_of_squares(power);
}

Rational even_moment_oracle(const FourierExpansion& f, int r, const Limits& limits) {
    if (r < 1)
        throw Error(Errc::bad_args, "moment order r must be >= 1");
    TruthTable table = expansion_to_table(f, limits);
    Rational sum;
    for (const Rational& value : table.values())
        sum += pow(value * value, static_cast<unsigned>(r));
    return sum * Rational(1, BigInt(1) << f.var_count());
}

double p_norm(const FourierExpansion& f, double p, const Limits& limits) {
    if (!(p >= 1.0))
        throw Error(Errc::bad_exponent, "p-norm requires p >= 1");
    std::vector<double> values = dense_values(f, limits);
    double mean = 0.0;
    for (double v : values)
        mean += std::pow(std::fabs(v), p);
    mean = std::ldexp(mean, -f.var_count());
    return std::pow(mean, 1.0 / p);
}

} // namespace pbf
